//! The Tate cohomology ring `Ĥ*(Λ, k)` with composition products.

use std::collections::BTreeMap;

use crate::complexes::{certified_window, ChainMap, Cohomology, HomComplex};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modrep::Module;
use crate::resolutions::{extend_chain_map, splice, Provider, Regime};

/// Classes `tk -> Σ^n tk` in degrees `[lo, hi]` with structure constants of the product
/// `x·y = (x then Σ^{|x|} y)`.
#[derive(Clone, Debug)]
pub struct GradedRing<F: Field> {
    pub lo: i64,
    pub hi: i64,
    pub dims: Vec<usize>,
    /// The identity class in degree 0.
    pub unit: Vec<F>,
    /// `(i, j)` to a `(dim_i · dim_j) × dim_{i+j}` matrix; row `a · dim_j + b` is `e_a · e_b`.
    pub products: BTreeMap<(i64, i64), Matrix<F>>,
}

impl<F: Field> GradedRing<F> {
    pub fn dim(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi {
            0
        } else {
            self.dims[(n - self.lo) as usize]
        }
    }

    /// Product of `x` in degree `i` and `y` in degree `j`, when `i + j` is in range.
    pub fn product(&self, i: i64, x: &[F], j: i64, y: &[F]) -> Option<Vec<F>> {
        let table = self.products.get(&(i, j))?;
        let mut out = vec![F::zero(); table.cols()];
        for (a, xa) in x.iter().enumerate() {
            for (b, yb) in y.iter().enumerate() {
                let c = xa.clone() * yb.clone();
                if c.is_zero() {
                    continue;
                }
                for (k, t) in table.row(a * y.len() + b).iter().enumerate() {
                    out[k] = out[k].clone() + c.clone() * t.clone();
                }
            }
        }
        Some(out)
    }

    fn basis(&self, n: i64) -> Vec<Vec<F>> {
        let d = self.dim(n);
        (0..d)
            .map(|k| {
                let mut e = vec![F::zero(); d];
                e[k] = F::one();
                e
            })
            .collect()
    }

    /// `(xy)z = x(yz)` on basis triples whose degrees all stay in range.
    pub fn is_associative(&self) -> bool {
        for i in self.lo..=self.hi {
            for j in self.lo..=self.hi {
                for k in self.lo..=self.hi {
                    let in_range = |n: i64| n >= self.lo && n <= self.hi;
                    if !(in_range(i + j) && in_range(j + k) && in_range(i + j + k)) {
                        continue;
                    }
                    for x in self.basis(i) {
                        for y in self.basis(j) {
                            let xy = self.product(i, &x, j, &y).expect("in range");
                            for z in self.basis(k) {
                                let yz = self.product(j, &y, k, &z).expect("in range");
                                if self.product(i + j, &xy, k, &z) != self.product(i, &x, j + k, &yz) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// The unit acts as the identity from both sides in every degree.
    pub fn is_unital(&self) -> bool {
        (self.lo..=self.hi).all(|n| {
            self.basis(n).iter().all(|x| {
                self.product(0, &self.unit, n, x).as_deref() == Some(x) && self.product(n, x, 0, &self.unit).as_deref() == Some(x)
            })
        })
    }

    /// A two-sided inverse of `x` in degree `n`, if one exists in range.
    pub fn inverse(&self, n: i64, x: &[F]) -> Option<Vec<F>> {
        let m = -n;
        let d = self.dim(m);
        if d == 0 || self.dim(0) == 0 {
            return None;
        }
        // rows: x·e_b and e_b·x stacked side by side
        let rows: Vec<Vec<F>> = self
            .basis(m)
            .iter()
            .map(|e| {
                let mut r = self.product(n, x, m, e).expect("in range");
                r.extend(self.product(m, e, n, x).expect("in range"));
                r
            })
            .collect();
        let sys = Matrix::from_rows(&rows, 2 * self.dim(0));
        let mut rhs = self.unit.clone();
        rhs.extend(self.unit.clone());
        let sol = sys.solve_left(&Matrix::row_vector(rhs)).ok()??;
        Some(sol.row(0).to_vec())
    }
}

struct Degree<F: Field> {
    hom: HomComplex<F>,
    h: Cohomology<F>,
    maps: Vec<ChainMap<F>>,
}

/// `Ĥ^n(Λ, k) = H^0 Hom(tk, Σ^n tk)` for `n` in `[lo, hi]` with all in-range products.
pub fn tate_ring<F: Field>(provider: &Provider<F>, lo: i64, hi: i64) -> Result<GradedRing<F>> {
    if provider.regime != Regime::SelfInjective {
        return Err(Error::NonSelfInjective);
    }
    if lo > 0 || hi < 0 {
        return Err(Error::InvalidComplex("the ring window must contain degree 0".into()));
    }
    let k = Module::trivial(provider.algebra.clone())?;
    let tk = splice(&k)?.complex;
    let mut degrees = BTreeMap::new();
    for n in lo..=hi {
        let target = tk.shift(n);
        let w = certified_window(&tk, &target)?
            .ok_or_else(|| Error::WindowExhausted("no certified window for Hom(tk, Σ^n tk)".into()))?;
        let hom = HomComplex::new(&tk, &target, w)?;
        let h = hom.cohomology(0)?;
        let maps = h
            .reps
            .iter()
            .map(|v| extend_chain_map(&tk, &target, hom.to_maps(0, v)?, true))
            .collect::<Result<Vec<_>>>()?;
        degrees.insert(n, Degree { hom, h, maps });
    }
    let class = |n: i64, f: &dyn Fn(i64) -> Result<Matrix<F>>| -> Result<Vec<F>> {
        let d = &degrees[&n];
        let (plo, phi) = d.hom.p_range(0);
        let maps = (plo..=phi).map(|p| Ok((p, f(p)?))).collect::<Result<BTreeMap<_, _>>>()?;
        let v = d.hom.from_maps(0, &maps)?;
        d.h.class_of(&v).ok_or_else(|| Error::InternalConsistency("composite is not a cocycle".into()))
    };
    let unit = class(0, &|p| Ok(Matrix::identity(tk.dim(p)?)))?;
    let mut products = BTreeMap::new();
    for i in lo..=hi {
        for j in lo..=hi {
            if i + j < lo || i + j > hi {
                continue;
            }
            let mut rows = Vec::new();
            for x in &degrees[&i].maps {
                for y in &degrees[&j].maps {
                    rows.push(class(i + j, &|p| Ok(x.component(p)?.matmul(&y.component(p + i)?)))?);
                }
            }
            products.insert((i, j), Matrix::from_rows(&rows, degrees[&(i + j)].h.dim()));
        }
    }
    let dims = (lo..=hi).map(|n| degrees[&n].h.dim()).collect();
    Ok(GradedRing { lo, hi, dims, unit, products })
}

