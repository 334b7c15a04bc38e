//! Structural properties on random gentle algebras.

use std::collections::BTreeSet;

use proptest::prelude::*;

use gentle_mar::bar::bar_algebra;
use gentle_mar::endo::{endomorphism_presentation, tensor_algebra};
use gentle_mar::homext::{arrow_extensions, ext1_basis, hom_basis, overlap_extensions};
use gentle_mar::mar::{certificate, enumerate_mars, m_inj, m_proj, mar_size, required_summands};
use gentle_mar::string_modules::{
    dim_vector, injective, projective, radical_summands, socle, socle_quotient_summands, top,
};
use gentle_mar::strings::{
    detect_bands, downset_occurrences, enumerate_strings, longest_string_len, make_string, step_left, step_right,
    upset_occurrences,
};
use gentle_mar::{fixtures, random_gentle, StringWord};

fn total(q: &gentle_mar::BoundQuiver, w: &StringWord) -> usize {
    dim_vector(q, w).total()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn mproj_and_minj_are_mar(seed in 0u64..100_000) {
        let q = random_gentle(seed, 6);
        let p = m_proj(&q);
        prop_assert_eq!(p.len(), mar_size(&q));
        prop_assert!(certificate(&q, &p).is_mar());
        prop_assert!(certificate(&q, &m_inj(&q)).is_mar());
        for v in 0..q.vertex_count() {
            prop_assert_eq!(p.contains(&StringWord::Trivial(v)), q.outdegree(v) < 2);
            prop_assert_eq!(top(&q, &projective(&q, v)), vec![v]);
            prop_assert_eq!(socle(&q, &injective(&q, v)), vec![v]);
        }
    }

    #[test]
    fn extension_lemmas(seed in 0u64..100_000) {
        let q = random_gentle(seed, 5);
        let ws: Vec<StringWord> = enumerate_strings(&q, 3).into_iter().collect();
        // a second arrow extension glues the other end of a closed string;
        // with bands a string can extend itself in up to four ways
        let band_free = detect_bands(&q).is_none();
        let closed = |x: &StringWord| x.is_trivial() || x.start(&q) == x.end(&q);
        for v in &ws {
            for w in &ws {
                let e = ext1_basis(&q, v, w);
                if band_free && e.overlap_exts.is_empty() && e.arrow_exts.len() >= 2 {
                    prop_assert_eq!(e.arrow_exts.len(), 2);
                    prop_assert!(v != w && (closed(v) || closed(w)));
                }
                for a in &e.arrow_exts {
                    prop_assert_eq!(total(&q, &a.middle), total(&q, v) + total(&q, w));
                }
                for o in &e.overlap_exts {
                    prop_assert_eq!(total(&q, &o.middles.0) + total(&q, &o.middles.1), total(&q, v) + total(&q, w));
                    prop_assert!(!hom_basis(&q, w, v).is_empty());
                }
            }
        }
        for x in 0..q.vertex_count() {
            for n in &ws {
                prop_assert!(overlap_extensions(&q, &projective(&q, x), n).is_empty());
                for r in radical_summands(&q, x) {
                    prop_assert!(overlap_extensions(&q, &r, n).is_empty());
                }
            }
        }
    }

    #[test]
    fn required_summands_are_the_common_part(seed in 0u64..100_000) {
        let q = random_gentle(seed, 5);
        prop_assume!(detect_bands(&q).is_none());
        let e = enumerate_mars(&q, longest_string_len(&q).unwrap());
        prop_assert!(!e.mars.is_empty());
        let mut common = e.mars[0].clone();
        for t in &e.mars {
            common = common.intersection(t).cloned().collect();
        }
        prop_assert_eq!(common, required_summands(&q));
    }

    #[test]
    fn bar_is_gentle_without_overlaps(seed in 0u64..100_000) {
        let q = random_gentle(seed, 6);
        let b = bar_algebra(&q);
        prop_assert!(b.bar.is_gentle());
        prop_assert!(b.bar.overlapping_relations().is_none());
        prop_assert_eq!(b.bar.vertex_count(), q.vertex_count() + q.arrow_count());
        prop_assert_eq!(b.bar.arrow_count(), 2 * q.arrow_count());
        prop_assert_eq!(b.bar.relations().len(), q.relations().len());
        for a in 0..q.arrow_count() {
            let i = b.vertex_map[q.source(a)];
            let pv = projective(&b.bar, b.vertex_of_arrow[a]);
            prop_assert!(radical_summands(&b.bar, i).contains(&pv));
            prop_assert!(socle(&b.bar, &pv).iter().all(|v| !b.vertex_of_arrow.contains(v)));
        }
        for &v in &b.vertex_map {
            prop_assert!(socle(&b.bar, &projective(&b.bar, v)).iter().all(|x| !b.vertex_of_arrow.contains(x)));
        }
    }

    #[test]
    fn endomorphism_algebras_of_mars(seed in 0u64..100_000) {
        let q = random_gentle(seed, 4);
        prop_assume!(detect_bands(&q).is_none());
        for t in enumerate_mars(&q, longest_string_len(&q).unwrap()).mars.iter().take(5) {
            let c = endomorphism_presentation(&q, t);
            prop_assert!(c.is_ok(), "{:?}", c.err());
            let c = c.unwrap();
            prop_assert!(c.quiver.is_gentle());
            let b = tensor_algebra(&c).unwrap();
            prop_assert_eq!(b.quiver.arrow_count(), c.quiver.arrow_count() + c.relation_set().len());
            prop_assert_eq!(b.relation_set().len(), 3 * c.relation_set().len());
        }
    }
}

#[test]
fn string_round_trip_and_steps() {
    for q in fixtures::corpus() {
        for w in enumerate_strings(&q, 4) {
            if let StringWord::Word(l) = &w {
                assert_eq!(make_string(&q, l).unwrap(), w);
            }
            for s in [step_left(&q, &w), step_right(&q, &w)] {
                if let Some(StringWord::Word(l)) = &s.result {
                    assert!(make_string(&q, l).is_ok());
                }
            }
            assert_eq!(upset_occurrences(&q, &w, &w).len(), 1);
        }
    }
}

#[test]
fn up_and_down_sets_are_dual() {
    let q = fixtures::ex1();
    let ws: Vec<StringWord> = enumerate_strings(&q, 3).into_iter().collect();
    for w in &ws {
        for u in &ws {
            // a proper factor that is both a sub and a quotient would split off
            let up: BTreeSet<_> = upset_occurrences(&q, w, u).into_iter().collect();
            let down: BTreeSet<_> = downset_occurrences(&q, w, u).into_iter().collect();
            for p in up.intersection(&down) {
                assert!(p.first == 0 && p.last == w.len(), "proper factor both sub and quotient");
            }
        }
    }
}

#[test]
fn projective_arms_and_injective_duals() {
    for q in fixtures::corpus() {
        if !q.is_finite_dimensional() {
            continue;
        }
        for v in 0..q.vertex_count() {
            for r in socle_quotient_summands(&q, v) {
                for n in enumerate_strings(&q, 3) {
                    assert!(overlap_extensions(&q, &n, &r).is_empty());
                }
            }
            for n in enumerate_strings(&q, 3) {
                assert!(overlap_extensions(&q, &n, &injective(&q, v)).is_empty());
            }
        }
    }
    let q = fixtures::kronecker();
    assert_eq!(arrow_extensions(&q, &StringWord::Trivial(0), &StringWord::Trivial(1)).len(), 2);
}
