//! The two long exact sequences of Tate cohomology attached to a short exact sequence.
//!
//! `Hom(-, tC)` turns `0 -> A' -> A -> A'' -> 0` into a degreewise exact sequence of Hom
//! complexes since the terms of `tC` are injective; over a self-injective algebra they are
//! also projective, so `Hom(tC, -)` does the same in the other variable. The connecting
//! maps come from the snake lemma on these sequences.

use serde_json::json;

use crate::complexes::{ChainComplex, Cohomology, HomComplex, HomWindow};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modrep::{Module, ShortExactSequence};
use crate::resolutions::{complete_resolution, Provider};
use crate::stable::report::Report;
use crate::stable::tate::{Route, TateContext};

/// A Hom complex whose degree `n + offset` cohomology is the group in degree `n`.
struct Column<F: Field> {
    hom: HomComplex<F>,
    offset: i64,
}

/// `L · f · R` on every component, as a matrix between degree-`m` coordinate spaces.
fn induced<F: Field>(src: &HomComplex<F>, tgt: &HomComplex<F>, m: i64, pre: Option<&Matrix<F>>, post: Option<&Matrix<F>>) -> Result<Matrix<F>> {
    let ds = src.dim(m)?;
    let mut rows = Vec::with_capacity(ds);
    for k in 0..ds {
        let mut e = vec![F::zero(); ds];
        e[k] = F::one();
        let maps = src
            .to_maps(m, &e)?
            .into_iter()
            .map(|(p, f)| {
                let f = match pre {
                    Some(l) => l.matmul(&f),
                    None => f,
                };
                let f = match post {
                    Some(r) => f.matmul(r),
                    None => f,
                };
                (p, f)
            })
            .collect();
        rows.push(tgt.from_maps(m, &maps)?);
    }
    Ok(Matrix::from_rows(&rows, tgt.dim(m)?))
}

fn classes<F: Field>(h: &Cohomology<F>, vs: &[Vec<F>]) -> Result<Matrix<F>> {
    let rows = vs
        .iter()
        .map(|v| h.class_of(v).ok_or_else(|| Error::InternalConsistency("image is not a cocycle".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(&rows, h.dim()))
}

fn apply<F: Field>(v: &[F], m: &Matrix<F>) -> Vec<F> {
    Matrix::row_vector(v.to_vec()).matmul(m).row(0).to_vec()
}

/// One long exact sequence: groups `G_0, G_1, ...` and maps `G_i -> G_{i+1}`.
pub struct LongSequence<F> {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> LongSequence<F> {
    /// Slots (indices into `dims`) where exactness fails.
    pub fn inexact_slots(&self) -> Vec<usize> {
        (1..self.dims.len().saturating_sub(1))
            .filter(|&i| {
                let (u, w) = (&self.maps[i - 1], &self.maps[i]);
                !(u.matmul(w).is_zero() && u.rank() + w.rank() == self.dims[i])
            })
            .collect()
    }
}

/// `H(K') -α-> H(K) -β-> H(K'') -δ-> H(K')[+1]` over group degrees `[lo, hi]`.
fn long_sequence<F: Field>(
    cols: [&Column<F>; 3],
    alpha: &dyn Fn(i64) -> Result<Matrix<F>>,
    beta: &dyn Fn(i64) -> Result<Matrix<F>>,
    names: [&str; 3],
    lo: i64,
    hi: i64,
) -> Result<LongSequence<F>> {
    let off = cols[0].offset;
    let mut seq = LongSequence { labels: Vec::new(), dims: Vec::new(), maps: Vec::new() };
    for n in lo..=hi {
        let m = n + off;
        let h: Vec<Cohomology<F>> = cols.iter().map(|c| c.hom.cohomology(m)).collect::<Result<_>>()?;
        let (a, b) = (alpha(m)?, beta(m)?);
        for (k, name) in names.iter().enumerate() {
            seq.labels.push(format!("{name}^{n}"));
            seq.dims.push(h[k].dim());
        }
        let img: Vec<Vec<F>> = h[0].reps.iter().map(|v| apply(v, &a)).collect();
        seq.maps.push(classes(&h[1], &img)?);
        let img: Vec<Vec<F>> = h[1].reps.iter().map(|v| apply(v, &b)).collect();
        seq.maps.push(classes(&h[2], &img)?);
        if n < hi {
            let next = cols[0].hom.cohomology(m + 1)?;
            let a1 = alpha(m + 1)?;
            let d = cols[1].hom.differential(m)?;
            let mut rows = Vec::new();
            for z in &h[2].reps {
                let y = b
                    .solve_left(&Matrix::row_vector(z.clone()))?
                    .ok_or_else(|| Error::InternalConsistency("Hom sequence is not degreewise surjective".into()))?;
                let w = y.matmul(&d);
                let x = a1
                    .solve_left(&w)?
                    .ok_or_else(|| Error::InternalConsistency("boundary does not come from the left term".into()))?;
                rows.push(x.row(0).to_vec());
            }
            seq.maps.push(classes(&next, &rows)?);
        }
    }
    Ok(seq)
}

fn record<F: Field>(r: &mut Report, name: &str, seq: &LongSequence<F>) {
    for (l, d) in seq.labels.iter().zip(&seq.dims) {
        r.dim(format!("{name}.{l}"), *d);
    }
    let bad = seq.inexact_slots();
    let witness = json!(bad.iter().map(|&i| seq.labels[i].clone()).collect::<Vec<_>>());
    r.check_with(format!("{name}.exact"), bad.is_empty(), witness);
}

/// Ranks of the connecting maps (every third map) of a sequence.
pub fn connecting_ranks<F: Field>(seq: &LongSequence<F>) -> Vec<usize> {
    seq.maps.iter().skip(2).step_by(3).map(|m| m.rank()).collect()
}

pub struct LesCheck<F> {
    /// `Êxt(C, A') -> Êxt(C, A) -> Êxt(C, A'') -> Êxt^{+1}(C, A')`.
    pub covariant: LongSequence<F>,
    /// `Êxt(A'', C) -> Êxt(A, C) -> Êxt(A', C) -> Êxt^{+1}(A'', C)`.
    pub contravariant: LongSequence<F>,
    pub report: Report,
}

pub fn les_check<F: Field>(s: &ShortExactSequence<F>, c: &Module<F>, provider: &Provider<F>, window: (i64, i64)) -> Result<LesCheck<F>> {
    provider.require_supported()?;
    let (lo, hi) = window;
    let tc = complete_resolution(c, provider)?.complex;
    let mods = [s.left(), s.middle(), s.right()];
    let (iota, pi) = (s.inj.matrix(), s.surj.matrix());

    // Hom(tC, X) has Êxt^n(C, X) in degree n + 1
    let cov: Vec<Column<F>> = mods
        .iter()
        .map(|m| Ok(Column { hom: HomComplex::new(&tc, &ChainComplex::concentrated(m, 0), HomWindow::Auto)?, offset: 1 }))
        .collect::<Result<_>>()?;
    let covariant = long_sequence(
        [&cov[0], &cov[1], &cov[2]],
        &|m| induced(&cov[0].hom, &cov[1].hom, m, None, Some(iota)),
        &|m| induced(&cov[1].hom, &cov[2].hom, m, None, Some(pi)),
        ["Ext(C,A')", "Ext(C,A)", "Ext(C,A'')"],
        lo,
        hi,
    )?;

    let con: Vec<Column<F>> = mods
        .iter()
        .rev()
        .map(|m| Ok(Column { hom: HomComplex::new(&ChainComplex::concentrated(m, 0), &tc, HomWindow::Auto)?, offset: 0 }))
        .collect::<Result<_>>()?;
    let contravariant = long_sequence(
        [&con[0], &con[1], &con[2]],
        &|m| induced(&con[0].hom, &con[1].hom, m, Some(pi), None),
        &|m| induced(&con[1].hom, &con[2].hom, m, Some(iota), None),
        ["Ext(A'',C)", "Ext(A,C)", "Ext(A',C)"],
        lo,
        hi,
    )?;

    let mut report = Report::new("les", window).with_regime(provider.regime);
    record(&mut report, "covariant", &covariant);
    record(&mut report, "contravariant", &contravariant);

    // the covariant groups are computed from tC; they must match the defining route into tX
    let mut agree = true;
    for (k, m) in mods.iter().enumerate() {
        let ctx = TateContext::with_routes(c, m, provider, &[Route::HomIntoComplete])?;
        for n in lo..=hi {
            agree &= ctx.group(n)?.dim == covariant.dims[3 * (n - lo) as usize + k];
        }
    }
    report.check("covariant_matches_route1", agree);
    Ok(LesCheck { covariant, contravariant, report })
}
