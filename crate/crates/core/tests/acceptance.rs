//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use distsurf::arith::{Field, GaussQuad, QuadExt, Rational};
use distsurf::huff::{emit_rds, generate_points, huff_search, HuffInstance};
use distsurf::poly::{pullback_2form, LaurentPoly, TwoForm};
use distsurf::rds::{
    detect_k, invert_points, invert_set, is_rational_set, normalize_set, PlanePoint,
    RationalDistanceSet, SimilarityTransform,
};
use distsurf::surface::{
    blowup_pullback_check, build_surface, check_form, eliminate_affine_singularities,
    general_type_certificate, ramification_bookkeeping, singular_affine_points,
    CertificateOutcome, SingularLocation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("singular-count law", Duration::from_secs(300), c1_singular_count),
        ("degree law", Duration::from_secs(60), c2_degree),
        ("canonical bookkeeping", Duration::from_secs(60), c3_bookkeeping),
        ("blow-up regularity", Duration::from_secs(60), c4_blowup),
        ("normalization suite", Duration::from_secs(60), c5_normalize),
        ("inversion suite", Duration::from_secs(60), c6_inversion),
        ("Huff suite", Duration::from_secs(300), c7_huff),
        ("rational-point lift", Duration::from_secs(120), c8_lift),
        ("small-instance elimination", Duration::from_secs(60), c9_elimination),
        ("CLI determinism", Duration::from_secs(120), c10_cli),
    ];
    let mut failed = 0;
    for (n, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| Err(format!("panic: {:?}", e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())))));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > budget => Err(format!("{d}; took {elapsed:.1?}, budget {budget:?}")),
            o => o,
        };
        match outcome {
            Ok(d) => println!("criterion {:>2} PASS {name}: {d} ({elapsed:.2?})", n + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {d} ({elapsed:.2?})", n + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}

fn six_point_sets(count: usize, seed: u64) -> Vec<Vec<PlanePoint>> {
    let pool = oracle_sets(1, 4, 6);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let set = &pool[rng.gen_range(0..pool.len())];
        if let Some(pts) = random_subset(&mut rng, set, 6) {
            if !out.contains(&pts) {
                out.push(pts);
            }
        }
    }
    out
}

fn gauss(q: &QuadExt) -> GaussQuad {
    GaussQuad::real(q.clone())
}

/// Maps a point of the factored model back to the original `(x, y)` plane:
/// `x = (u + v)/2`, `y = (u - v)/(2i)`.
fn unfactor(u: &GaussQuad, v: &GaussQuad) -> (GaussQuad, GaussQuad) {
    let half = GaussQuad::from_i64(2).inv().unwrap();
    let x = (u.clone() + v.clone()) * half.clone();
    let y = (u.clone() - v.clone()) * half * GaussQuad::i().inv().unwrap();
    (x, y)
}

fn c1_singular_count() -> Outcome {
    let sets = six_point_sets(10, 1);
    for pts in &sets {
        let s = build_surface(pts).map_err(|e| e.to_string())?;
        let recs = singular_affine_points(&s).map_err(|e| e.to_string())?;
        ensure!(recs.len() == 36, "found {} records", recs.len());
        // oracle: check the original equation and its partials, in the
        // original coordinates, at each record
        let f = s.affine().map_coeffs(gauss);
        let polys = [f.clone(), f.derivative(0), f.derivative(1), f.derivative(2)];
        let mut seen = Vec::new();
        for rec in &recs {
            let SingularLocation::Affine { x, y, z } = &rec.location else {
                return Err("non-affine record".into());
            };
            ensure!(z.is_zero(), "z != 0");
            let (ox, oy) = unfactor(x, y);
            let at = [ox, oy, GaussQuad::zero()];
            for p in &polys {
                ensure!(p.eval(&at).is_zero(), "a polynomial does not vanish at {:?}", at);
            }
            ensure!(!seen.contains(&(x.clone(), y.clone())), "repeated record");
            seen.push((x.clone(), y.clone()));
        }
    }
    Ok(format!("{} sets, 36 nodes each, all 4 polynomials vanish", sets.len()))
}

fn c2_degree() -> Outcome {
    for pts in six_point_sets(10, 1) {
        let d = build_surface(&pts).unwrap().projective_degree();
        ensure!(d == 12, "6 points give degree {d}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for g in 2..=5usize {
        let m = 2 * g + 2;
        let s = build_surface(&random_points(&mut rng, 1, m)).unwrap();
        ensure!(s.projective_degree() == 2 * m as i64, "m = {m}: degree {}", s.projective_degree());
        ensure!(s.projective().is_homogeneous(), "m = {m}: not homogeneous");
    }
    Ok("12 for m = 6 (10 sets), 2m for m = 8, 10, 12".into())
}

fn c3_bookkeeping() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (m, bideg, class) in [(6, (6, 6), (1, 1)), (8, (8, 8), (2, 2))] {
        let s = build_surface(&random_points(&mut rng, 1, m)).unwrap();
        let r = ramification_bookkeeping(&s).map_err(|e| e.to_string())?;
        ensure!(r.branch_bidegree == bideg, "m = {m}: bidegree {:?}", r.branch_bidegree);
        ensure!(r.canonical_pullback_class == class, "m = {m}: class {:?}", r.canonical_pullback_class);
    }
    for (m, reason) in [(4, "g < 2"), (5, "m odd")] {
        let pts = random_points(&mut rng, 1, m);
        match general_type_certificate(&pts).map_err(|e| e.to_string())? {
            CertificateOutcome::Rejected(r) => ensure!(r.to_string() == reason, "m = {m}: reason {r}"),
            CertificateOutcome::Issued(_) => return Err(format!("m = {m} certified")),
        }
    }
    Ok("(6,6)/(1,1), (8,8)/(2,2); m=4 'g < 2', m=5 'm odd'".into())
}

fn c4_blowup() -> Outcome {
    let xyz = ["x", "y", "z"];
    let t = ["x'", "y'", "z'"];
    let v = |vars: &[&str], n: &str| LaurentPoly::<Rational>::var(vars, n).unwrap();
    let omega = TwoForm::dy_dx_form(v(&xyz, "z").signed_pow(-1).unwrap());
    let pulled = pullback_2form(&omega).map_err(|e| e.to_string())?;
    let expected = TwoForm::new(v(&t, "z'"), v(&t, "x'"), v(&t, "y'")).unwrap();
    ensure!(pulled == expected, "omega' = {:?}", pulled);
    for g in [2usize, 3] {
        let r = blowup_pullback_check(g).map_err(|e| e.to_string())?;
        ensure!(r.omega_identity, "g = {g}: omega identity");
        ensure!(r.forms.len() == g * g, "g = {g}: {} forms", r.forms.len());
        for f in &r.forms {
            // every coefficient of y'^k x'^l z'^(k+l) omega' is a monomial with
            // nonnegative exponents
            for c in f.pullback.components() {
                ensure!(c.terms().all(|(m, _)| m.exponents().iter().all(|&e| e >= 0)), "g = {g}: form ({}, {}) irregular", f.k, f.l);
            }
        }
    }
    let planted = check_form(-1, 0).map_err(|e| e.to_string())?;
    ensure!(!planted.regular, "k = -1 form not flagged");
    Ok("three-term identity; 4 + 9 regular pullbacks; k = -1 flagged".into())
}

/// `p -> lambda R p + t` with `R` a rational rotation (times an optional
/// reflection) built from a Pythagorean pair, so distances scale by `lambda`.
fn random_similarity<R: Rng>(rng: &mut R) -> (SimilarityTransform, Rational) {
    let (s, t) = loop {
        let s: i64 = rng.gen_range(1..=6);
        let t: i64 = rng.gen_range(0..=6);
        if s != t {
            break (s, t);
        }
    };
    let h = s * s + t * t;
    let c = r(s * s - t * t, h);
    let sn = r(2 * s * t, h);
    let lambda = r(rng.gen_range(1..=9), rng.gen_range(1..=9));
    let q = |x: Rational| QuadExt::rational(x);
    let flip = if rng.gen_bool(0.5) { r(-1, 1) } else { r(1, 1) };
    let matrix = [
        [q(&lambda * &c), q(-(&lambda * &sn) * &flip)],
        [q(&lambda * &sn), q(&lambda * &c * &flip)],
    ];
    let translation = [q(r(rng.gen_range(-9..=9), rng.gen_range(1..=5))), q(r(rng.gen_range(-9..=9), rng.gen_range(1..=5)))];
    (SimilarityTransform { matrix, translation }, lambda)
}

fn c5_normalize() -> Outcome {
    let mut pool = oracle_sets(1, 3, 4);
    pool.extend(oracle_sets(3, 2, 4));
    pool.extend(oracle_sets(2, 2, 3));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut ks = std::collections::BTreeSet::new();
    for _ in 0..100 {
        let set = &pool[rng.gen_range(0..pool.len())];
        let (tr, _) = random_similarity(&mut rng);
        let moved: Vec<PlanePoint> = set.points().iter().map(|p| tr.apply(p).unwrap()).collect();
        ensure!(oracle_all_distances_rational(&moved), "transformed copy not rational");
        let copy = RationalDistanceSet::new(moved.clone(), set.k()).unwrap().verify().map_err(|e| e.to_string())?;
        let n = copy.len();
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let (out, _) = normalize_set(&copy, i, j).map_err(|e| e.to_string())?;
        let pts = out.points();
        ensure!(pts.contains(&PlanePoint::int(0, 0)) && pts.contains(&PlanePoint::int(1, 0)), "anchors not at (0,0), (1,0)");
        let k = set.k();
        for p in pts {
            ensure!(p.x().is_rational(), "x = {} not rational", p.x());
            let surd = if k == 1 { p.y().is_rational() } else { p.y().is_pure_surd() };
            ensure!(surd && (p.y().is_rational() || p.y().k() == k), "y = {} not r*sqrt({k})", p.y());
        }
        ensure!(detect_k(pts).map_err(|e| e.to_string())? == if pts.iter().all(|p| p.y().is_rational()) { 1 } else { k }, "inconsistent k");
        ks.insert(k);
        let anchor = oracle_sqrt(&oracle_dist2(&moved[i], &moved[j]));
        for a in 0..n {
            for b in a + 1..n {
                let before = oracle_sqrt(&oracle_dist2(&moved[a], &moved[b]));
                let after = oracle_sqrt(&oracle_dist2(&pts[a], &pts[b]));
                ensure!(after == &before / &anchor, "distance ({a}, {b}) not scaled by 1/d");
            }
        }
    }
    Ok(format!("100 transformed copies, k in {ks:?}"))
}

fn c6_inversion() -> Outcome {
    let mut pool = oracle_sets(1, 3, 4);
    pool.truncate(20);
    pool.extend(oracle_sets(3, 2, 4).into_iter().take(5));
    ensure!(pool.len() >= 20, "only {} oracle sets", pool.len());
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut runs = 0;
    for set in &pool {
        for c in 0..set.len() {
            for _ in 0..5 {
                let radius = r(rng.gen_range(1..=12), rng.gen_range(1..=7));
                let img = invert_set(set, c, &radius).map_err(|e| e.to_string())?;
                ensure!(is_rational_set(img.points()).map_err(|e| e.to_string())?.is_rational(), "image not rational");
                ensure!(oracle_all_distances_rational(img.points()), "oracle: image not rational");
                let center = &set.points()[c];
                let back = invert_points(img.points(), center, &radius).map_err(|e| e.to_string())?;
                let rest: Vec<PlanePoint> = set.points().iter().enumerate().filter(|(i, _)| *i != c).map(|(_, p)| p.clone()).collect();
                ensure!(back == rest, "double inversion does not restore the set");
                runs += 1;
            }
        }
    }
    Ok(format!("{} sets, {runs} inversions", pool.len()))
}

fn c7_huff() -> Outcome {
    let inst = HuffInstance::new(r(4, 1), r(40, 3)).unwrap();
    let found = huff_search(&inst, 50).map_err(|e| e.to_string())?;
    let seed = found.iter().find(|p| p.x == r(3, 1)).ok_or("x = 3 not found for (4, 40/3)")?;
    let g = generate_points(&inst, seed, 3).map_err(|e| e.to_string())?;
    let mut all = vec![seed.clone()];
    all.extend(g.points.iter().cloned());
    let detail = match &g.torsion {
        Some(t) => format!("torsion of order {}", t.order),
        None => {
            ensure!(g.points.len() >= 3, "only {} generated points", g.points.len());
            for p in &g.points {
                ensure!(p.satisfies(&inst), "generated x = {} fails", p.x);
            }
            let mut xs: Vec<_> = all.iter().map(|p| p.x.clone()).collect();
            xs.sort();
            xs.dedup();
            ensure!(xs.len() == all.len(), "repeated x");
            format!("{} search hits, {} generated points", found.len(), g.points.len())
        }
    };
    let rds = emit_rds(&inst, &all).map_err(|e| e.to_string())?;
    ensure!(is_rational_set(rds.points()).map_err(|e| e.to_string())?.is_rational(), "emitted set not rational");
    ensure!(oracle_all_distances_rational(rds.points()), "oracle: emitted set not rational");
    Ok(format!("{detail}; emitted {} points", rds.len()))
}

fn for_each_six_subset(n: usize, mut f: impl FnMut(&[usize]) -> Outcome) -> Outcome {
    let mut idx: Vec<usize> = (0..6).collect();
    loop {
        f(&idx)?;
        let Some(pos) = (0..6).rev().find(|&p| idx[p] != p + n - 6) else { return Ok(String::new()) };
        idx[pos] += 1;
        for q in pos + 1..6 {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn c8_lift() -> Outcome {
    let pool = oracle_sets(1, 4, 6);
    let mut lifts = 0;
    let mut nonzero = 0;
    for set in &pool {
        let pts = set.points();
        for_each_six_subset(pts.len(), |idx| {
            let a: Vec<PlanePoint> = idx.iter().map(|&i| pts[i].clone()).collect();
            let s = build_surface(&a).map_err(|e| e.to_string())?;
            for p in pts {
                let (z0, ok) = s.lift_point(p).map_err(|e| e.to_string())?.ok_or("no lift")?;
                let z_oracle = a.iter().fold(Rational::from_i64(1), |acc, q| acc * oracle_sqrt(&oracle_dist2(p, q)));
                ensure!(z0 == QuadExt::rational(z_oracle), "lift differs from the oracle product");
                ensure!(ok && s.affine().eval(&[p.x().clone(), p.y().clone(), z0.clone()]).is_zero(), "lift is not a zero of F");
                lifts += 1;
                if !z0.is_zero() {
                    nonzero += 1;
                }
            }
            Ok(String::new())
        })?;
    }
    ensure!(nonzero > 0, "no lift off z = 0 was exercised");
    Ok(format!("{} sets, {lifts} lifts ({nonzero} off z = 0)", pool.len()))
}

fn c9_elimination() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut runs = 0;
    for m in 1..=3usize {
        for k in [1u64, 2, 3, 5] {
            for _ in 0..3 {
                let s = build_surface(&random_points(&mut rng, k, m)).unwrap();
                let rep = eliminate_affine_singularities(&s).map_err(|e| e.to_string())?;
                ensure!(rep.z_root.is_zero(), "z root {}", rep.z_root);
                ensure!(rep.candidate_count == m * m, "m = {m}: {} candidates", rep.candidate_count);
                ensure!(rep.confirmed == m * m && rep.complete, "m = {m}: {} confirmed", rep.confirmed);
                // oracle: the eliminants' roots are exactly the z_j and their conjugates
                for zj in s.roots() {
                    ensure!(rep.x_eliminant.eval(zj).is_zero(), "z_j missing from x eliminant");
                    ensure!(rep.y_eliminant.eval(&zj.conjugate()).is_zero(), "conj z_j missing from y eliminant");
                }
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} surfaces with m in 1..=3, exactly m^2 points each"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn c10_cli() -> Outcome {
    let out_dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let golden = out_dir.path().join("surface.txt");
    let f = |n: &str| fixture(n).display().to_string();
    let cases: Vec<(Vec<String>, i32)> = vec![
        (vec!["verify".into(), f("triangle.json")], 0),
        (vec!["verify".into(), f("diagonal.json")], 0),
        (vec!["verify".into(), f("decimal.json")], 1),
        (vec!["verify".into(), f("missing_k.json")], 1),
        (vec!["normalize".into(), f("six.json"), "--anchors".into(), "0,1".into()], 0),
        (vec!["normalize".into(), f("diagonal.json"), "--anchors".into(), "0,1".into()], 1),
        (vec!["invert".into(), f("six.json"), "--center".into(), "2".into(), "--radius".into(), "3/2".into()], 0),
        (vec!["invert".into(), f("six.json"), "--center".into(), "2".into(), "--radius".into(), "1.5".into()], 1),
        (vec!["huff".into(), "--a".into(), "4".into(), "--b".into(), "40/3".into(), "--height".into(), "12".into(), "--generate".into(), "3".into()], 0),
        (vec!["surface".into(), f("two.json"), "--out".into(), golden.display().to_string()], 0),
        (vec!["certify".into(), f("six.json")], 0),
        (vec!["certify".into(), f("five.json")], 2),
        (vec!["certify".into(), f("collinear.json")], 2),
        (vec!["search".into(), "--k".into(), "1".into(), "--height".into(), "2".into(), "--size".into(), "4".into()], 0),
        (vec!["hypersurface".into(), f("space.json"), "--dim".into(), "3".into()], 0),
        (vec!["hypersurface".into(), f("space.json"), "--dim".into(), "2".into()], 1),
        (vec!["frobnicate".into()], 1),
    ];
    let bin = env!("CARGO_BIN_EXE_distsurf");
    for (args, code) in &cases {
        let mut outputs = Vec::new();
        for threads in ["1", "4"] {
            let o = Command::new(bin).args(args).env("RD_THREADS", threads).output().map_err(|e| e.to_string())?;
            ensure!(o.status.code() == Some(*code), "{args:?}: exit {:?}, expected {code}", o.status.code());
            let v: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| format!("{args:?}: stdout is not JSON: {e}"))?;
            let status = ["ok", "error", "rejected"][*code as usize];
            ensure!(v["status"] == status, "{args:?}: status {}", v["status"]);
            outputs.push(o.stdout);
        }
        ensure!(outputs[0] == outputs[1], "{args:?}: output differs between runs");
    }
    let diag: serde_json::Value = serde_json::from_slice(&Command::new(bin).args(["verify", &f("diagonal.json")]).output().unwrap().stdout).unwrap();
    ensure!(diag["payload"]["rational"] == false && diag["payload"]["counterexample"].is_object(), "diagonal verdict");
    let five: serde_json::Value = serde_json::from_slice(&Command::new(bin).args(["certify", &f("five.json")]).output().unwrap().stdout).unwrap();
    ensure!(five["payload"]["reason"] == "m odd", "five-point reason {}", five["payload"]["reason"]);
    let six: serde_json::Value = serde_json::from_slice(&Command::new(bin).args(["certify", &f("six.json")]).output().unwrap().stdout).unwrap();
    ensure!(six["payload"]["certificate"]["g"] == 2, "six-point certificate g");
    ensure!(golden.exists(), "--out file not written");
    Ok(format!("{} invocations, each run twice", cases.len()))
}
