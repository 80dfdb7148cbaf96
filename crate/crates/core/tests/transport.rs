//! Moving configurations around by hexagon automorphisms.

use std::sync::OnceLock;

use hexmagic::hexagon::{automorphism_group, sigma_from_table};
use hexmagic::magic::{builtin, builtin_names, is_magic, parity_shortcut, replicate};
use hexmagic::tables::{REPLICAS_18_2_12_3, REPLICAS_2_4_14_2_4_3_6_4};
use hexmagic::{AutomorphismGroup, Configuration, Hexagon, PointPermutation};
use rand::{Rng, SeedableRng};

fn setup() -> &'static (Hexagon, AutomorphismGroup) {
    static S: OnceLock<(Hexagon, AutomorphismGroup)> = OnceLock::new();
    S.get_or_init(|| {
        let h = Hexagon::build().unwrap();
        let g = automorphism_group(&h);
        (h, g)
    })
}

/// Invariants every automorphic image must share with the original.
fn assert_same_shape(cfg: &Configuration, img: &Configuration) {
    assert_eq!(img.contexts().len(), cfg.contexts().len());
    assert_eq!(img.point_profile(), cfg.point_profile());
    assert_eq!(img.context_profile(), cfg.context_profile());
    let verdict = is_magic(img);
    assert_eq!(verdict.magic, is_magic(cfg).magic, "{}", img.name());
    assert!(verdict.verify(img));
    // every observable meets an even number of contexts, so the parity of
    // negative contexts decides magic-ness and survives transport
    assert_eq!(parity_shortcut(img), parity_shortcut(cfg));
    assert_eq!(
        img.negative_contexts().len() % 2,
        cfg.negative_contexts().len() % 2
    );
}

#[test]
fn sigma_powers_keep_built_ins_magic() {
    let sigma = sigma_from_table().unwrap();
    for name in builtin_names() {
        let cfg = builtin(name).unwrap();
        assert!(is_magic(&cfg).magic);
        for k in 1..=6 {
            let img = replicate(&cfg, &sigma, k).unwrap();
            assert_same_shape(&cfg, &img);
            assert!(is_magic(&img).magic, "{name} σ^{k}");
        }
    }
}

#[test]
fn replicas_agree_with_table_columns() {
    let sigma = sigma_from_table().unwrap();
    for (name, table) in [
        (builtin_names()[0], &REPLICAS_18_2_12_3[..]),
        (builtin_names()[1], &REPLICAS_2_4_14_2_4_3_6_4[..]),
    ] {
        let cfg = builtin(name).unwrap();
        for k in 0..7 {
            let img = replicate(&cfg, &sigma, k).unwrap();
            let mut got: Vec<String> = img.points().iter().map(ToString::to_string).collect();
            let mut want: Vec<String> = table.iter().map(|row| row[k].to_string()).collect();
            got.sort();
            want.sort();
            assert_eq!(got, want, "{name} column {k}");
        }
    }
}

#[test]
fn sigma_is_a_group_element_and_matches_replicate() {
    let (h, g) = setup();
    let perm = PointPermutation::from_slice(&h.sigma().point_permutation()).unwrap();
    assert!(g.contains(&perm));
    let sigma = sigma_from_table().unwrap();
    for name in builtin_names() {
        let cfg = builtin(name).unwrap();
        let mut p = PointPermutation::identity();
        for k in 1..=6 {
            p = perm.compose(&p);
            let by_perm = cfg.permute("p", &p).unwrap();
            let by_map = replicate(&cfg, &sigma, k).unwrap();
            assert_eq!(by_perm.contexts(), by_map.contexts());
        }
    }
}

#[test]
fn random_automorphisms_keep_built_ins_magic() {
    let (_, g) = setup();
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    for name in builtin_names() {
        let cfg = builtin(name).unwrap();
        for _ in 0..200 {
            let e = &g.elements()[rng.gen_range(0..g.order())];
            let img = cfg.permute("g", e).unwrap();
            assert_same_shape(&cfg, &img);
            assert!(is_magic(&img).magic);
        }
    }
}

#[test]
fn negative_context_count_is_not_an_invariant() {
    // signs are recomputed from the transported observables, so only their
    // parity is preserved
    let sigma = sigma_from_table().unwrap();
    let cfg = builtin(builtin_names()[0]).unwrap();
    let counts: Vec<usize> = (0..7)
        .map(|k| replicate(&cfg, &sigma, k).unwrap().negative_contexts().len())
        .collect();
    assert_eq!(counts, [3, 1, 3, 3, 3, 3, 1]);
}

#[test]
fn every_automorphism_preserves_lines_and_hyperplane_property() {
    let (h, g) = setup();
    let cfg = builtin(builtin_names()[0]).unwrap();
    let closed = hexmagic::magic::closure(cfg.support(), h).final_set;
    for e in g.elements() {
        assert!(e.preserves_lines(h));
        let img = hexmagic::PointSet(e.apply_mask(closed.0));
        assert!(hexmagic::hyperplanes::is_hyperplane(img, h));
        assert_eq!(
            hexmagic::hyperplanes::signature_of(img, h),
            hexmagic::hyperplanes::signature_of(closed, h)
        );
    }
}

#[test]
fn non_magic_configurations_stay_non_magic() {
    let (_, g) = setup();
    let parse = |s: &[&str]| s.iter().map(|l| l.parse().unwrap()).collect::<Vec<_>>();
    let cfg = Configuration::new(
        "two lines",
        vec![parse(&["XII", "IXI", "XXI"]), parse(&["ZII", "IZI", "ZZI"])],
    )
    .unwrap();
    assert!(!is_magic(&cfg).magic);
    for e in g.elements().iter().step_by(97) {
        let img = cfg.permute("g", e).unwrap();
        let v = is_magic(&img);
        assert!(!v.magic && v.verify(&img));
    }
}
