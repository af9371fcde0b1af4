mod common;

use std::collections::BTreeSet;

use legendrian::catalog::catalog_entry;
use legendrian::homology::{betti, find_augmentations, linearise, Augmentation};
use legendrian::spun::verify_inclusion;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{f, random_spun, SPUN_SOURCES};

#[test]
fn augmentations_pull_back_to_the_source() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for source in SPUN_SOURCES {
        for p in [2, 3, 5] {
            let s = random_spun(&mut rng, source, p, 2);
            assert!(verify_inclusion(&s));
            let n = s.source.len();
            for mu in 1..p {
                let below: BTreeSet<Augmentation> = find_augmentations(&s.source, p, mu, 1, true)
                    .unwrap()
                    .into_iter()
                    .collect();
                for e in find_augmentations(&s.dga, p, mu, 1, true).unwrap() {
                    assert!(below.contains(&e.restrict(n)), "{source} F_{p} mu={mu}");
                }
            }
        }
    }
}

#[test]
fn constant_loop_homology_is_the_shifted_sum() {
    for (name, p) in [("unknot", 2), ("trefoil", 2), ("trefoil", 3)] {
        let a = catalog_entry(name).unwrap().dga(f(p)).unwrap().unwrap();
        let s = catalog_entry(&format!("spun:{name}"))
            .unwrap()
            .spun(f(p))
            .unwrap()
            .unwrap();
        let mu = p - 1;
        let knot_augs = find_augmentations(&a, p, mu, 1, true).unwrap();
        assert!(!knot_augs.is_empty());
        for e in find_augmentations(&s.dga, p, mu, 1, true).unwrap() {
            let base = e.restrict(a.len());
            let hk = betti(&linearise(&a, &base, &base).unwrap());
            let hs = betti(&linearise(&s.dga, &e, &e).unwrap());
            assert_eq!(hs, hk.shifted_sum(&hk), "{name} F_{p}");
        }
    }
}

#[test]
fn hats_are_one_degree_up_and_slightly_longer() {
    let s = catalog_entry("spun:trefoil")
        .unwrap()
        .spun(f(2))
        .unwrap()
        .unwrap();
    for x in s.source.ids() {
        let h = s.hat(x);
        assert!(s.is_hatted(h));
        assert_eq!(s.dga.degree(h), s.dga.degree(x) + 1);
        assert!(s.dga.gen(h).length > s.dga.gen(x).length);
        assert_eq!(s.dga.gen(h).name, format!("{}^", s.dga.gen(x).name));
    }
}
