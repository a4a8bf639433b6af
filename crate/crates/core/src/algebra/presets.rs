//! Preset algebras: the base field, truncated polynomials, group algebras, exterior
//! algebras and upper triangular matrices.

use crate::algebra::{Algebra, HopfDatum};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

/// The field itself as a one-dimensional algebra, with its trivial Hopf structure.
pub fn base_field<F: Field>() -> Algebra<F> {
    let one = vec![F::one()];
    let hopf = HopfDatum::new(Matrix::new(1, 1, one.clone()), one.clone(), Matrix::identity(1)).expect("shapes");
    Algebra::from_table(1, one.clone(), one, Some(vec![]), Some(hopf), Some(vec!["1".into()]))
        .expect("base field is valid")
}

/// `k[t]/(t^2)` with basis `{1, t}`; in characteristic 2 `t` is primitive and the algebra is Hopf.
pub fn dual_numbers<F: Field>() -> Algebra<F> {
    let mut a = exterior_table::<F>(1);
    a.labels = Some(vec!["1".into(), "t".into()]);
    a.build()
}

/// Group algebra of the group with multiplication table `table` (`table[g][h]` = index of `gh`).
///
/// Carries the group-like Hopf structure. The radical is the augmentation ideal when the
/// group order is a power of the characteristic, and zero when the characteristic does not
/// divide the order; in the remaining case no radical is attached.
pub fn group_algebra<F: Field>(table: &[Vec<usize>]) -> Result<Algebra<F>> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (g, row) in table.iter().enumerate() {
        if row.len() != n || row.iter().any(|&x| x >= n) {
            return Err(Error::NotAGroup(format!("row {g} has wrong length or entries")));
        }
        let mut seen = vec![false; n];
        for &x in row {
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAGroup(format!("row {g} repeats an element")));
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("associativity fails on ({a}, {b}, {c})")));
                }
            }
        }
    }
    let inverse: Vec<usize> = (0..n)
        .map(|g| (0..n).find(|&h| table[g][h] == e).expect("latin square row contains e"))
        .collect();

    let mut tab = vec![F::zero(); n * n * n];
    for g in 0..n {
        for h in 0..n {
            tab[(g * n + h) * n + table[g][h]] = F::one();
        }
    }
    let mut unit = vec![F::zero(); n];
    unit[e] = F::one();

    let mut comul = Matrix::zeros(n, n * n);
    let mut antipode = Matrix::zeros(n, n);
    for g in 0..n {
        comul[(g, g * n + g)] = F::one();
        antipode[(g, inverse[g])] = F::one();
    }
    let hopf = HopfDatum::new(comul, vec![F::one(); n], antipode)?;

    let p = F::characteristic();
    let radical = if p != 0 && is_power_of(n as u64, p) {
        Some(
            (0..n)
                .filter(|&g| g != e)
                .map(|g| {
                    let mut v = vec![F::zero(); n];
                    v[g] = F::one();
                    v[e] = -F::one();
                    v
                })
                .collect(),
        )
    } else if p == 0 || (n as u64) % p != 0 {
        Some(vec![])
    } else {
        None
    };
    let labels = (0..n).map(|g| if g == e { "e".to_string() } else { format!("g{g}") }).collect();
    Algebra::from_table(n, tab, unit, radical, Some(hopf), Some(labels))
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Multiplication table of the cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Multiplication table of `C_2 × C_2` on indices `0 = e, 1 = g, 2 = h, 3 = gh`.
pub fn klein_four_table() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

pub fn cyclic_group_algebra<F: Field>(n: usize) -> Result<Algebra<F>> {
    group_algebra(&cyclic_table(n))
}

pub fn klein_four_algebra<F: Field>() -> Algebra<F> {
    group_algebra(&klein_four_table()).expect("Klein four table is a group")
}

struct Draft<F> {
    n: usize,
    table: Vec<F>,
    unit: Vec<F>,
    radical: Option<Vec<Vec<F>>>,
    hopf: Option<HopfDatum<F>>,
    labels: Option<Vec<String>>,
}

impl<F: Field> Draft<F> {
    fn build(self) -> Algebra<F> {
        Algebra::from_table(self.n, self.table, self.unit, self.radical, self.hopf, self.labels)
            .expect("preset algebra is valid")
    }
}

fn exterior_table<F: Field>(d: usize) -> Draft<F> {
    let n = 1usize << d;
    let mut table = vec![F::zero(); n * n * n];
    for s in 0..n {
        for t in 0..n {
            if s & t != 0 {
                continue;
            }
            // sign of moving each generator of t past the larger generators of s
            let mut swaps = 0;
            for b in 0..d {
                if t >> b & 1 == 1 {
                    swaps += (s >> (b + 1)).count_ones();
                }
            }
            let sign = if swaps % 2 == 0 { F::one() } else { -F::one() };
            table[(s * n + t) * n + (s | t)] = sign;
        }
    }
    let mut unit = vec![F::zero(); n];
    unit[0] = F::one();
    let radical = (1..n)
        .map(|s| {
            let mut v = vec![F::zero(); n];
            v[s] = F::one();
            v
        })
        .collect();
    let hopf = (F::characteristic() == 2).then(|| {
        let mut comul = Matrix::zeros(n, n * n);
        for s in 0..n {
            // all subsets a of s
            let mut a = s;
            loop {
                comul[(s, a * n + (s & !a))] = F::one();
                if a == 0 {
                    break;
                }
                a = (a - 1) & s;
            }
        }
        let mut counit = vec![F::zero(); n];
        counit[0] = F::one();
        HopfDatum::new(comul, counit, Matrix::identity(n)).expect("shapes")
    });
    let labels = (0..n)
        .map(|s| {
            if s == 0 {
                "1".to_string()
            } else {
                (0..d).filter(|b| s >> b & 1 == 1).map(|b| format!("x{b}")).collect()
            }
        })
        .collect();
    Draft { n, table, unit, radical: Some(radical), hopf, labels: Some(labels) }
}

/// Exterior algebra on `d` generators; basis element `s` is the product of the generators
/// whose bits are set in `s`, in increasing order.
pub fn exterior_algebra<F: Field>(d: usize) -> Algebra<F> {
    exterior_table::<F>(d).build()
}

/// Upper triangular `n × n` matrices with basis `e_ij` (`i ≤ j`) in lexicographic order.
pub fn upper_triangular_algebra<F: Field>(n: usize) -> Algebra<F> {
    assert!(n >= 1, "upper triangular algebra needs n >= 1");
    let units: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let dim = units.len();
    let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).expect("upper unit");
    let mut table = vec![F::zero(); dim * dim * dim];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                table[(a * dim + b) * dim + index(i, l)] = F::one();
            }
        }
    }
    let mut unit = vec![F::zero(); dim];
    for i in 0..n {
        unit[index(i, i)] = F::one();
    }
    let radical = units
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| i < j)
        .map(|(a, _)| {
            let mut v = vec![F::zero(); dim];
            v[a] = F::one();
            v
        })
        .collect();
    let labels = units.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    Draft { n: dim, table, unit, radical: Some(radical), hopf: None, labels: Some(labels) }.build()
}

/// Parses a preset name without field suffix: `field`, `k[t]/t^2`, `kC<n>`, `kV4`,
/// `exterior(<d>)`, `T<n>`.
pub fn preset<F: Field>(name: &str) -> Result<Algebra<F>> {
    let name = name.trim();
    let bad = || Error::Parse(format!("unknown preset `{name}`"));
    match name {
        "field" | "k" => return Ok(base_field()),
        "k[t]/t^2" | "k[t]/(t^2)" | "k[t]/t²" => return Ok(dual_numbers()),
        "kV4" | "kV₄" => return Ok(klein_four_algebra()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("kC") {
        let n: usize = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        return cyclic_group_algebra(n);
    }
    if let Some(rest) = name.strip_prefix("exterior(").and_then(|r| r.strip_suffix(')')) {
        let d: usize = rest.trim().parse().map_err(|_| bad())?;
        if d > 6 {
            return Err(Error::Parse("exterior algebras are limited to 6 generators".into()));
        }
        return Ok(exterior_algebra(d));
    }
    if let Some(rest) = name.strip_prefix('T') {
        let n: usize = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        if n == 0 || n > 8 {
            return Err(Error::Parse("upper triangular presets need 1 <= n <= 8".into()));
        }
        return Ok(upper_triangular_algebra(n));
    }
    Err(bad())
}
