use std::sync::Arc;

use equichar::charfun::{geometric_project, induce, inner_product, isotypic_dim_at, restrict, ClassFunction};
use equichar::curve::invert_one_minus;
use equichar::cyclo::rational::{int, rat};
use equichar::groups::{catalog, PermGroup};
use equichar::lrr::{assemble_sectors, reassemble, sector_data};
use equichar::oracle::{self, matrix::MatrixGroupSpec};
use equichar::random::{Lcg, VirtualCharacterSampler};
use num_integer::Integer;
use proptest::prelude::*;

fn named(i: usize) -> Arc<PermGroup> {
    match i {
        0 => catalog::symmetric3(0),
        1 => catalog::dihedral4(0),
        2 => catalog::cyclic(6, 0),
        _ => catalog::quaternion8(0),
    }
}

fn sample(group: &Arc<PermGroup>, seed: u64) -> ClassFunction {
    VirtualCharacterSampler::new(group.clone())
        .unwrap()
        .sample(&mut Lcg::new(seed))
}

fn arb_rational_fn(group: &Arc<PermGroup>, raw: &[i64]) -> ClassFunction {
    let values = (0..group.class_count())
        .map(|c| rat(raw[c % raw.len()], 1 + c as i64))
        .collect();
    ClassFunction::from_rationals(group.clone(), values).unwrap()
}

/// Transports `f` to the same group viewed in characteristic `p`.
fn to_char(f: &ClassFunction, target: &Arc<PermGroup>) -> ClassFunction {
    ClassFunction::from_fn(target.clone(), |rep| f.value_at(rep).unwrap().clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_reciprocity(gi in 0usize..4, g in 0usize..8, raw in prop::collection::vec(-5i64..=5, 1..6), raw_h in prop::collection::vec(-5i64..=5, 1..6)) {
        let group = named(gi);
        let emb = group.cyclic_subgroup(g % group.order()).unwrap();
        let f = arb_rational_fn(&emb.sub, &raw);
        let h = arb_rational_fn(&group, &raw_h);
        let lhs = inner_product(&induce(&f, &emb).unwrap(), &h).unwrap();
        let rhs = inner_product(&f, &restrict(&h, &emb).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn isotypic_dims_sum_to_dimension(gi in 0usize..4, seed in any::<u64>()) {
        let group = named(gi);
        let v = sample(&group, seed);
        for s in 0..group.order() {
            let r = group.element_order(s) as i64;
            let mut total = int(0);
            for i in 0..r {
                let dim = isotypic_dim_at(&v, s, i).unwrap();
                prop_assert!(dim.is_integer());
                total += dim;
            }
            prop_assert_eq!(Some(total), v.dimension().to_rational());
        }
    }

    #[test]
    fn geometric_projection_is_idempotent_and_linear(gi in 0usize..4, a in any::<u64>(), b in any::<u64>(), c in -4i64..=4) {
        let group = named(gi);
        let (u, v) = (sample(&group, a), sample(&group, b));
        let pu = geometric_project(&u);
        prop_assert_eq!(geometric_project(&pu), pu.clone());
        let combo = u.checked_add(&v.scale(&int(c))).unwrap();
        let expected = pu.checked_add(&geometric_project(&v).scale(&int(c))).unwrap();
        prop_assert_eq!(geometric_project(&combo), expected);
    }

    #[test]
    fn modular_reduction_commutes_with_induction(p in prop::sample::select(vec![2u32, 3]), g in 0usize..6, raw in prop::collection::vec(-5i64..=5, 1..7)) {
        let g0 = catalog::cyclic(6, 0);
        let gp = g0.with_characteristic(p).unwrap();
        let (e0, ep) = (g0.cyclic_subgroup(g).unwrap(), gp.cyclic_subgroup(g).unwrap());
        let f = arb_rational_fn(&e0.sub, &raw);
        let reduced_first = induce(&to_char(&f, &ep.sub), &ep).unwrap();
        let induced_first = to_char(&induce(&f, &e0).unwrap(), &gp);
        prop_assert_eq!(reduced_first, induced_first);

        let h = arb_rational_fn(&g0, &raw);
        prop_assert_eq!(restrict(&to_char(&h, &gp), &ep).unwrap(), to_char(&restrict(&h, &e0).unwrap(), &ep.sub));
    }

    #[test]
    fn reassembly_is_identity(gi in 0usize..6, seed in any::<u64>()) {
        let groups = catalog::acceptance_groups();
        let group = &groups[gi % groups.len()];
        let v = sample(group, seed);
        prop_assert_eq!(reassemble(&v).unwrap(), v);
    }

    #[test]
    fn assembly_ignores_marking(gi in 0usize..4, seed in any::<u64>(), k in 1i64..12) {
        let group = named(gi);
        let v = sample(&group, seed);
        let data = sector_data(&v).unwrap();
        for sector in data.sectors() {
            let r = sector.sigma.order as i64;
            prop_assume!(r > 0);
            if k.gcd(&r) != 1 {
                continue;
            }
            let remarked = data.with_marking(sector.sigma.id, k).unwrap();
            prop_assert_eq!(assemble_sectors(&remarked).unwrap(), v.clone());
        }
    }

    #[test]
    fn invert_one_minus_is_pointwise_inverse(m in 2usize..=12, j in 1i64..12) {
        prop_assume!(j.gcd(&(m as i64)) == 1);
        let group = catalog::cyclic(m, 0);
        let gen = group.generator_indices()[0];
        let chi = ClassFunction::cyclic_character(group.clone(), gen, j).unwrap();
        let inv = invert_one_minus(&chi, m).unwrap();
        let one_minus = ClassFunction::trivial(group.clone()).checked_sub(&chi).unwrap();
        let product = one_minus.checked_mul(&inv).unwrap();
        for (x, y) in chi.values().iter().zip(product.values()) {
            if !x.is_one() {
                prop_assert!(y.is_one());
            }
        }
        prop_assert_eq!(inv.dimension().to_rational(), Some(rat(-(m as i64 - 1), 2)));
    }

    #[test]
    fn serre_duality(spec in prop::sample::select(equichar::verify::oracle_specs()), d in -6i64..=6) {
        let g = oracle::build(&spec.to_string()).unwrap();
        prop_assert!(oracle::serre_defect(&g, d).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn class_equation(gi in 0usize..6, p in prop::sample::select(vec![0u32, 2, 3])) {
        let groups = catalog::acceptance_groups();
        let group = groups[gi % groups.len()].with_characteristic(p).unwrap();
        let total: usize = group.all_classes().iter().map(|c| c.size).sum();
        prop_assert_eq!(total, group.order());
        for c in group.all_classes() {
            prop_assert_eq!(group.order() % c.size, 0);
        }
        let regular: usize = group.conjugacy_classes(true).iter().map(|c| c.size).sum();
        let expected = (0..group.order()).filter(|&i| group.is_p_regular(i)).count();
        prop_assert_eq!(regular, expected);
    }
}

#[test]
fn enumeration_is_deterministic() {
    for spec in [MatrixGroupSpec::Cyclic(6), MatrixGroupSpec::Dihedral(5)] {
        let a = oracle::build(&spec.to_string()).unwrap();
        let b = oracle::build(&spec.to_string()).unwrap();
        assert_eq!(a.elements(), b.elements());
        assert_eq!(a.abstract_group().elements(), b.abstract_group().elements());
    }
    let (a, b) = (catalog::alternating4(0), catalog::alternating4(0));
    assert_eq!(a.elements(), b.elements());
    assert_eq!(sample(&a, 7), sample(&b, 7));
}
