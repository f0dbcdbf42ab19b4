//! Hand-checkable curve data.

use std::sync::Arc;

use super::{CurveDatum, GlobalChi, RamifiedOrbit};
use crate::charfun::ClassFunction;
use crate::cyclo::rational::int;
use crate::groups::{catalog, PermGroup, SubgroupEmbedding};
use crate::lrr::marked_generator;

fn full_orbit(group: &Arc<PermGroup>, conormal: ClassFunction, e_t: usize) -> RamifiedOrbit {
    RamifiedOrbit::new(
        SubgroupEmbedding::identity(group.clone()),
        group.order(),
        e_t,
        ClassFunction::trivial(group.clone()),
        conormal,
    )
    .expect("valid fixture orbit")
}

/// `ℤ/2` acting on `P¹` by `t ↦ −t` with `E = O`: two fixed points, trivial
/// fibers, conormal character the sign. `χ_G = ` trivial character.
pub fn hyperelliptic_z2() -> CurveDatum {
    let g = catalog::cyclic(2, 0);
    let sign = ClassFunction::cyclic_character(g.clone(), marked_generator(&g), 1).expect("cyclic");
    let orbit = full_orbit(&g, sign, 2);
    CurveDatum::new(g, 1, GlobalChi::Direct(int(1)), vec![orbit.clone(), orbit]).expect("valid fixture")
}

/// `ℤ/n` acting on `P¹` through `diag(1, ζ_n)` with `E = O(d)`, in
/// Riemann–Roch mode. The generator has eigenvalues `(1, ζ)` on the fixed
/// lines `[1:0]`, `[0:1]`, giving fibers `1`, `χ^{−d}` and conormal
/// characters `χ^{−1}`, `χ`.
pub fn rotation_p1(n: usize, degree: i64) -> CurveDatum {
    let g = catalog::cyclic(n, 0);
    let s = marked_generator(&g);
    let chi = |j: i64| ClassFunction::cyclic_character(g.clone(), s, j).expect("cyclic");
    let orbits = if n == 1 {
        vec![]
    } else {
        vec![
            RamifiedOrbit::new(SubgroupEmbedding::identity(g.clone()), n, n, chi(0), chi(-1)).expect("valid"),
            RamifiedOrbit::new(SubgroupEmbedding::identity(g.clone()), n, n, chi(-degree), chi(1)).expect("valid"),
        ]
    };
    CurveDatum::new(
        g,
        1,
        GlobalChi::Hrr {
            degree,
            genus_quotient: 0,
        },
        orbits,
    )
    .expect("valid fixture")
}

/// `ℤ/p` acting on `P¹` in characteristic `p` by `t ↦ t + 1`, `E = O`: one
/// totally wildly ramified point (`e = p`, `e_t = 1`) and `χ(X, O) = 1`.
pub fn wild_cyclic(p: u32) -> CurveDatum {
    let g = catalog::cyclic(p as usize, p);
    let orbit = full_orbit(&g, ClassFunction::trivial(g.clone()), 1);
    CurveDatum::new(g, 1, GlobalChi::Direct(int(1)), vec![orbit]).expect("valid fixture")
}
