mod common;

use common::*;
use distsurf::arith::{Field, GaussQuad, QuadExt, Rational};
use distsurf::io::{certificate_file, load_certificate, parse_set_file};
use distsurf::poly::{expand_product, MPoly};
use distsurf::rds::PlanePoint;
use distsurf::surface::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pts(v: &[(i64, i64)]) -> Vec<PlanePoint> {
    v.iter().map(|&(x, y)| PlanePoint::int(x, y)).collect()
}

#[test]
fn golden_two_point_surface() {
    let s = build_surface(&pts(&[(0, 0), (1, 0)])).unwrap();
    let golden = include_str!("golden/two_points.txt");
    assert_eq!(format!("affine: {}\nprojective: {}\n", s.affine(), s.projective()), golden);
    let (p, q) = factored_form(&s);
    assert_eq!(p.to_mpoly(&["x"], 0).to_string(), "x^2 - x");
    assert_eq!(q.to_mpoly(&["y"], 0).to_string(), "y^2 - y");
    assert!(s.coordinate_change_holds().unwrap());
}

#[test]
fn single_point_surface() {
    let s = build_surface(&[PlanePoint::origin()]).unwrap();
    assert_eq!(s.affine().to_string(), "z^2 - y^2 - x^2");
    assert_eq!(s.projective_degree(), 2);
    let recs = singular_affine_points(&s).unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(
        recs[0].location,
        SingularLocation::Affine { x: GaussQuad::zero(), y: GaussQuad::zero(), z: GaussQuad::zero() }
    );
    assert_eq!(infinity_singularity(&s).unwrap(), None);
}

#[test]
fn duplicates_are_rejected() {
    assert!(build_surface(&pts(&[(1, 2), (3, 4), (1, 2)])).is_err());
    assert!(build_surface(&[]).is_err());
}

#[test]
fn dehomogenization_recovers_affine() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in 1..=4 {
        let s = build_surface(&random_points(&mut rng, 2, m)).unwrap();
        let back = s.projective().specialize(3, &QuadExt::one()).unwrap();
        let vars: Vec<&str> = vec!["x", "y", "z"];
        let expected = s.affine().embed(&["x", "y", "z", "w"]).unwrap();
        assert_eq!(back, expected, "m = {m}");
        assert_eq!(s.affine().vars(), &vars[..]);
    }
}

#[test]
fn two_point_node_has_rank_three() {
    let s = build_surface(&pts(&[(0, 0), (1, 0)])).unwrap();
    let model = s.factored_model();
    let z = s.roots();
    let q = classify_singularity(&model, &[z[0].clone(), z[1].conjugate(), GaussQuad::zero()]).unwrap();
    assert_eq!(q.rank, 3);
    // the local model itself
    let vars = ["x", "y", "z"];
    let v = |n: &str| MPoly::<Rational>::var(&vars, n).unwrap();
    let local = v("z").pow(2) - v("x") * v("y");
    let o = vec![Rational::zero(); 3];
    assert_eq!(classify_singularity(&local, &o).unwrap().rank, 3);
    // (1, 1, 1) is a smooth point of z^2 = xy
    let one = Rational::one();
    assert!(classify_singularity(&local, &[one.clone(), one.clone(), one]).is_err());
    for rec in singular_affine_points(&s).unwrap() {
        assert_eq!(classify_node(&s, &rec).unwrap(), LocalType::Node);
    }
}

#[test]
fn infinity_exponents() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (m, e) in [(2, (2, 2, 2)), (3, (4, 3, 3)), (6, (10, 6, 6))] {
        let s = build_surface(&random_points(&mut rng, 1, m)).unwrap();
        let rec = infinity_singularity(&s).unwrap().unwrap();
        assert_eq!(rec.local_type, LocalType::InfinityModel { z_exp: e.0, x_exp: e.1, y_exp: e.2 });
        let locus = infinity_locus(&s).unwrap();
        assert_eq!(locus.len(), 2);
        assert!(locus.iter().all(|c| c.singular_along));
    }
}

#[test]
fn coordinate_change_for_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for k in [1, 2, 7] {
        let a = random_points(&mut rng, k, 6);
        let s = build_surface(&a).unwrap();
        assert!(s.coordinate_change_holds().unwrap());
        // expanded P(x+iy) Q(x-iy) has purely real coefficients
        let product = expand_product(&a).unwrap();
        assert_eq!(product.total_degree(), Some(12));
    }
}

#[test]
fn bookkeeping_for_several_genera() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for g in 2..=4usize {
        let s = build_surface(&random_points(&mut rng, 1, 2 * g + 2)).unwrap();
        let r = ramification_bookkeeping(&s).unwrap();
        let g = g as i64;
        assert_eq!(r.branch_bidegree, (2 * g + 2, 2 * g + 2));
        assert_eq!(r.ramification_class, (g + 1, g + 1));
        assert_eq!(r.canonical_pullback_class, (g - 1, g - 1));
        assert!(r.ample);
    }
    let s = build_surface(&random_points(&mut rng, 1, 4)).unwrap();
    assert_eq!(ramification_bookkeeping(&s).unwrap_err().to_string(), "g < 2");
}

#[test]
fn node_pullbacks_are_regular() {
    let s = build_surface(&pts(&[(0, 0), (1, 0), (0, 1), (2, 3), (5, 1), (-1, 4)])).unwrap();
    assert_eq!(node_pullback_check(&s, 2).unwrap(), None);
}

#[test]
fn certificate_files_are_rechecked() {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/six.json");
    let bytes = std::fs::read(&path).unwrap();
    let set = parse_set_file(&path).unwrap();
    let CertificateOutcome::Issued(c) = general_type_certificate(set.points()).unwrap() else {
        panic!("six.json should certify");
    };
    assert_eq!((c.m, c.g, c.node_count, c.canonical_form_count), (6, 2, 36, 4));
    let file = certificate_file(&bytes, &set, c.clone());
    let text = serde_json::to_string(&file).unwrap();
    assert_eq!(load_certificate(&text, Some(&bytes)).unwrap(), c);
    assert!(load_certificate(&text, Some(b"other")).is_err());
    let tampered = text.replace("\"node_count\":36", "\"node_count\":35");
    assert_ne!(tampered, text);
    assert!(load_certificate(&tampered, None).is_err());
}

#[test]
fn hypersurface_in_the_plane_matches_the_surface() {
    let a = pts(&[(0, 0), (1, 0), (3, 4)]);
    let s = build_surface(&a).unwrap();
    let coords: Vec<Vec<Rational>> = a.iter().map(|p| vec![p.x().a().clone(), p.y().a().clone()]).collect();
    let h = hypersurface_nd(&coords).unwrap();
    let renamed = s.projective().map_coeffs(|c| c.a().clone()).rename(&["x1", "x2", "x3", "w"]);
    assert_eq!(h, renamed);
}

#[test]
fn hypersurface_evaluates_to_zero_at_rational_distance_points() {
    let a = vec![vec![r(0, 1), r(0, 1), r(0, 1)], vec![r(3, 1), r(0, 1), r(0, 1)]];
    let h = hypersurface_nd(&a).unwrap();
    // p = (0, 4, 0): distances 4 and 5
    let value = h.eval(&[r(0, 1), r(4, 1), r(0, 1), r(20, 1), r(1, 1)]);
    assert!(value.is_zero());
}
