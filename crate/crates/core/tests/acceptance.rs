//! The ten acceptance criteria, each run under its time limit with one summary line apiece.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use tate_core::algebra::*;
use tate_core::complexes::*;
use tate_core::corpus;
use tate_core::modrep::*;
use tate_core::resolutions::*;
use tate_core::stable::*;
use tate_core::{Field, Matrix, F2, F3, Q};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn provider<F: Field>(a: &Arc<Algebra<F>>) -> Result<Provider<F>, String> {
    detect_regime(a, DEFAULT_CUTOFF).map_err(e)
}

fn arc<F: Field>(a: Algebra<F>) -> Arc<Algebra<F>> {
    Arc::new(a)
}

/// Hand-built `⋯ -t-> Λ -t-> Λ -t-> ⋯` on `[lo, hi]` over `k[t]/t²`, and `H^n Hom(k, −)` of
/// it from raw Hom-spaces.
fn periodic_hand_oracle(lo: i64, hi: i64) -> Result<Vec<usize>, String> {
    let a: Arc<Algebra<F2>> = arc(dual_numbers());
    let lam = Module::regular(a.clone());
    let k = Module::trivial(a.clone()).map_err(e)?;
    let t = lam.act(1).clone();
    let len = (hi - lo + 3) as usize;
    let x = ChainComplex::explicit(a, lo - 1, vec![lam.clone(); len], vec![t; len - 1]).map_err(e)?;
    let h = HomComplex::new(&ChainComplex::concentrated(&k, 0), &x, HomWindow::Auto).map_err(e)?;
    (lo..=hi).map(|n| h.cohomology_dim(n).map_err(e)).collect()
}

fn c1() -> Outcome {
    let a: Arc<Algebra<F2>> = arc(dual_numbers());
    let p = provider(&a)?;
    let k = Module::trivial(a.clone()).map_err(e)?;
    let ctx = TateContext::with_routes(&k, &k, &p, &[Route::HomIntoComplete]).map_err(e)?;
    let oracle = periodic_hand_oracle(-6, 6)?;
    let dims: Vec<usize> = (-6..=6).map(|n| ctx.group(n).map(|g| g.dim)).collect::<Result<_, _>>().map_err(e)?;
    ensure(dims == oracle && dims.iter().all(|d| *d == 1), || format!("dims {dims:?}, oracle {oracle:?}"))?;
    Ok(format!("dims {dims:?}"))
}

fn c2() -> Outcome {
    let a: Arc<Algebra<F2>> = arc(cyclic_group_algebra(2).map_err(e)?);
    let ring = tate_ring(&provider(&a)?, -4, 4).map_err(e)?;
    ensure(ring.dims == vec![1; 9], || format!("dims {:?}", ring.dims))?;
    let x = [F2::from_i64(1)];
    let inv = ring.inverse(1, &x).ok_or("degree-1 generator has no inverse")?;
    ensure(ring.product(1, &x, -1, &inv).as_deref() == Some(&ring.unit[..]), || "x·x⁻¹ ≠ 1".into())?;
    ensure(ring.is_unital(), || "unit does not act as identity".into())?;
    Ok(format!("dims {:?}, x·x⁻¹ = 1", ring.dims))
}

fn c3() -> Outcome {
    let a: Arc<Algebra<F2>> = arc(klein_four_algebra());
    let k = Module::trivial(a.clone()).map_err(e)?;
    let mut dims = Vec::new();
    for n in 0..=6 {
        // ext_group fails on disagreement between the injective and projective routes
        let d = ext_group(&k, &k, n).map_err(e)?;
        ensure(d == n as usize + 1, || format!("Ext^{n} = {d}"))?;
        dims.push(d);
    }
    let t = splice(&k).map_err(e)?.complex;
    let top = |m: &Module<F2>| m.dim() - m.radical_basis().unwrap().rows();
    let soc = |m: &Module<F2>| m.socle_basis().unwrap().rows();
    for n in -4..=4i64 {
        let rank = t.dim(n).map_err(e)? / 4;
        // E(Σ^n k) has as many summands as Σ^n k has socle; P(Ω^m k) as many as Ω^m k has top
        let want = if n >= 0 {
            soc(&cosyzygy_n(&k, n as usize).map_err(e)?)
        } else {
            top(&syzygy_n(&k, (-n - 1) as usize).map_err(e)?)
        };
        ensure(rank == want, || format!("rank of tk^{n} is {rank}, oracle {want}"))?;
    }
    Ok(format!("Ext dims {dims:?}"))
}

fn c4() -> Outcome {
    fn run<F: Field>(a: Arc<Algebra<F>>, pairs: usize, seed: u64) -> Result<usize, String> {
        let p = provider(&a)?;
        ensure(p.regime == Regime::FiniteGlobalDimension, || format!("regime {}", p.regime))?;
        let mut r = corpus::rng(seed);
        let mut cells = 0;
        for _ in 0..pairs {
            let m = corpus::random_module(&a, &mut r, 6).map_err(e)?;
            let b = corpus::random_module(&a, &mut r, 6).map_err(e)?;
            let ctx = TateContext::new(&m, &b, &p).map_err(e)?;
            for n in -3..=3 {
                let d = ctx.group(n).map_err(e)?.dim;
                ensure(d == 0, || format!("Êxt^{n} = {d}"))?;
                cells += 1;
            }
        }
        Ok(cells)
    }
    let cells = run::<F2>(arc(upper_triangular_algebra(2)), 20, 401)? + run::<F3>(arc(upper_triangular_algebra(3)), 20, 402)?;
    Ok(format!("{cells} vanishing cells"))
}

fn route_cells<F: Field>(a: Arc<Algebra<F>>, seed: u64, count: usize, degrees: &[i64]) -> Result<(usize, usize), String> {
    let p = provider(&a)?;
    let mods = corpus::module_corpus(&a, count, seed).map_err(e)?;
    let (mut cells, mut multi) = (0, 0);
    for m in &mods {
        for b in &mods {
            let ctx = TateContext::new(m, b, &p).map_err(e)?;
            for &n in degrees {
                let g = ctx.group(n).map_err(e)?;
                cells += 1;
                if g.routes.iter().any(|(r, _)| *r == Route::HopfTensor) {
                    multi += 1;
                }
            }
        }
    }
    Ok((cells, multi))
}

fn c5() -> Outcome {
    let deg = [-2, 0, 1, 3];
    let mut total = (0, 0);
    let mut add = |x: (usize, usize)| {
        total.0 += x.0;
        total.1 += x.1;
    };
    add(route_cells::<F2>(arc(base_field()), 501, 1, &deg)?);
    add(route_cells::<F2>(arc(dual_numbers()), 502, 4, &deg)?);
    add(route_cells::<F2>(arc(cyclic_group_algebra(2).map_err(e)?), 503, 3, &deg)?);
    add(route_cells::<F3>(arc(cyclic_group_algebra(3).map_err(e)?), 504, 3, &deg)?);
    add(route_cells::<F2>(arc(klein_four_algebra()), 505, 4, &deg)?);
    add(route_cells::<F2>(arc(exterior_algebra(2)), 506, 3, &deg)?);
    add(route_cells::<Q>(arc(exterior_algebra(1)), 507, 3, &deg)?);
    add(route_cells::<F2>(arc(upper_triangular_algebra(2)), 508, 3, &deg)?);
    add(route_cells::<Q>(arc(upper_triangular_algebra(3)), 509, 3, &deg)?);
    ensure(total.0 >= 30, || format!("only {} cells", total.0))?;
    Ok(format!("{} cells agree, {} with the Hopf route", total.0, total.1))
}

fn c6() -> Outcome {
    fn run<F: Field>(a: Arc<Algebra<F>>, count: usize, seed: u64) -> Result<usize, String> {
        let mut r = corpus::rng(seed);
        for i in 0..count {
            let x = corpus::random_injective_complex(&a, &mut r, 0, 4, 12).map_err(e)?;
            let (lo, hi) = (0, 3);
            let d = minimal_decomposition(&x, lo, hi).map_err(e)?;
            let id = ChainMap::identity(&d.contractible);
            ensure(is_null_homotopic(&id, Some((lo - 1, hi + 1))).map_err(e)?.is_witness(), || format!("complex {i}: X'' not contractible"))?;
            ensure(is_minimal(&d.minimal, lo, hi).map_err(e)?, || format!("complex {i}: X' fails the envelope criterion"))?;
            for n in lo..=hi {
                let back = d.from_sum.component(n).map_err(e)?;
                let there = d.to_sum.component(n).map_err(e)?;
                ensure(back.is_square() && there.matmul(&back) == Matrix::identity(x.dim(n).map_err(e)?), || format!("complex {i}: degree {n} does not reassemble"))?;
                ensure(
                    d.minimal.dim(n).map_err(e)? + d.contractible.dim(n).map_err(e)? == x.dim(n).map_err(e)?,
                    || format!("complex {i}: dimensions in degree {n}"),
                )?;
            }
            d.to_sum.check(lo, hi).map_err(e)?;
            d.from_sum.check(lo, hi).map_err(e)?;
            let d2 = minimal_decomposition_random(&x, lo, hi, corpus::rng(seed ^ i as u64)).map_err(e)?;
            for n in lo..=hi {
                ensure(comparison(&d, &d2, n).map_err(e)?.is_iso(), || format!("complex {i}: X' -> X -> Y' not invertible in degree {n}"))?;
            }
        }
        Ok(count)
    }
    let n = run::<F2>(arc(klein_four_algebra()), 20, 601)?
        + run::<F2>(arc(dual_numbers()), 10, 602)?
        + run::<F3>(arc(cyclic_group_algebra(3).map_err(e)?), 10, 603)?
        + run::<F2>(arc(exterior_algebra(2)), 10, 604)?;
    Ok(format!("{n} complexes"))
}

fn c7() -> Outcome {
    fn run<F: Field>(a: Arc<Algebra<F>>, count: usize, seed: u64) -> Result<usize, String> {
        let p = provider(&a)?;
        let mods = corpus::module_corpus(&a, count, seed).map_err(e)?;
        let ts = mods.iter().map(|m| complete_resolution(m, &p).map(|r| r.complex)).collect::<Result<Vec<_>, _>>().map_err(e)?;
        let mut pairs = 0;
        for (i, m) in mods.iter().enumerate() {
            for (j, b) in mods.iter().enumerate() {
                let w = certified_window(&ts[i], &ts[j]).map_err(e)?.ok_or("no certified window")?;
                let h = HomComplex::new(&ts[i], &ts[j], w).map_err(e)?.cohomology_dim(0).map_err(e)?;
                let s = stable_hom(m, b).map_err(e)?.dim();
                ensure(h == s, || format!("pair ({i},{j}): H^0 = {h}, stable Hom = {s}"))?;
                pairs += 1;
            }
        }
        Ok(pairs)
    }
    let n = run::<F2>(arc(base_field()), 10, 701)?
        + run::<F2>(arc(dual_numbers()), 10, 702)?
        + run::<F2>(arc(cyclic_group_algebra(2).map_err(e)?), 10, 703)?
        + run::<F3>(arc(cyclic_group_algebra(3).map_err(e)?), 10, 704)?
        + run::<F2>(arc(klein_four_algebra()), 10, 705)?
        + run::<F2>(arc(exterior_algebra(2)), 10, 706)?
        + run::<Q>(arc(exterior_algebra(1)), 10, 707)?;
    Ok(format!("{n} pairs"))
}

fn c8() -> Outcome {
    fn run<F: Field>(a: Arc<Algebra<F>>, count: usize, seed: u64) -> Result<usize, String> {
        let p = provider(&a)?;
        for (i, m) in corpus::module_corpus(&a, count, seed).map_err(e)?.iter().enumerate() {
            let pair = approximation(m, &p).map_err(e)?;
            let r = pair.certify(&p).map_err(e)?;
            ensure(r.passed(), || format!("module {i}: {}", r.to_json()))?;
            let both = xclass_member(m, &p).map_err(e)? && yclass_member(m, &p).map_err(e)?;
            ensure(both == is_injective(m).map_err(e)?, || format!("module {i}: X ∩ Y membership differs from injectivity"))?;
        }
        Ok(count)
    }
    let n = run::<F2>(arc(dual_numbers()), 8, 801)?
        + run::<F2>(arc(cyclic_group_algebra(2).map_err(e)?), 6, 802)?
        + run::<F3>(arc(cyclic_group_algebra(3).map_err(e)?), 6, 803)?
        + run::<F2>(arc(klein_four_algebra()), 10, 804)?
        + run::<F2>(arc(exterior_algebra(2)), 6, 805)?
        + run::<F2>(arc(upper_triangular_algebra(2)), 8, 806)?
        + run::<Q>(arc(upper_triangular_algebra(3)), 8, 807)?;
    Ok(format!("{n} modules"))
}

fn c9() -> Outcome {
    fn run<F: Field>(a: Arc<Algebra<F>>, count: usize, seed: u64) -> Result<usize, String> {
        let p = provider(&a)?;
        let mut r = corpus::rng(seed);
        for i in 0..count {
            let s = corpus::random_ses(&a, &mut r, 6).map_err(e)?;
            let c = corpus::random_module(&a, &mut r, 5).map_err(e)?;
            let les = les_check(&s, &c, &p, (-3, 3)).map_err(e)?;
            ensure(les.report.passed(), || format!("sequence {i}: {}", les.report.to_json()))?;
        }
        Ok(count)
    }
    let n = run::<F2>(arc(base_field()), 50, 900)?
        + run::<F2>(arc(dual_numbers()), 50, 901)?
        + run::<F2>(arc(cyclic_group_algebra(2).map_err(e)?), 50, 902)?
        + run::<F3>(arc(cyclic_group_algebra(3).map_err(e)?), 50, 903)?
        + run::<F2>(arc(klein_four_algebra()), 50, 904)?
        + run::<F2>(arc(exterior_algebra(2)), 50, 905)?
        + run::<Q>(arc(exterior_algebra(1)), 50, 906)?;
    Ok(format!("{n} sequences"))
}

fn c10() -> Outcome {
    let a: Arc<Algebra<F2>> = arc(klein_four_algebra());
    let units = tensor_unit_resolutions(&a).map_err(e)?;
    let p = provider(&a)?;
    let mods = corpus::module_corpus(&a, 10, 1001).map_err(e)?;
    for (i, m) in mods.iter().enumerate() {
        let r = hopf_report(m, &units, (-2, 3)).map_err(e)?;
        ensure(r.passed(), || format!("module {i}: {}", r.to_json()))?;
        // the report lifts the identity from the splice, whose Z^0 is the replacement
        let t = gorenstein_replacement(m, &p).map_err(e)?;
        ensure(r.dims["TA"] == serde_json::json!(t.module.dim()), || format!("module {i}: replacement differs from Z^0(tA)"))?;
        ensure(r.checks.iter().any(|c| c.name == "stable_iso_with_replacement" && c.pass), || format!("module {i}: no stable isomorphism"))?;
    }
    Ok(format!("{} modules", mods.len()))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("periodic Tate cohomology of k[t]/t^2", 1, c1),
        ("Tate ring of F2[C2]", 1, c2),
        ("Klein four Ext growth and splice ranks", 5, c3),
        ("vanishing in finite global dimension", 5, c4),
        ("route agreement", 60, c5),
        ("minimal decompositions", 60, c6),
        ("H^0 Hom(tA, tB) = stable Hom(A, B)", 30, c7),
        ("approximation sequences", 30, c8),
        ("long exact sequences", 60, c9),
        ("Hopf tensor resolutions", 30, c10),
    ];
    let mut failed = 0;
    let mut err = std::io::stderr();
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(*limit) => Err(format!("{msg}; exceeded {limit}s")),
            o => o,
        };
        let line = match &outcome {
            Ok(msg) => format!("criterion {:>2} PASS {:>8.3}s (limit {limit}s) {name}: {msg}", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                format!("criterion {:>2} FAIL {:>8.3}s (limit {limit}s) {name}: {msg}", i + 1, elapsed.as_secs_f64())
            }
        };
        writeln!(err, "{line}").ok();
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
