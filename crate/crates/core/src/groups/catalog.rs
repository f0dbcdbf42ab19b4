//! Small named groups used by the acceptance suites and the CLI.

use std::sync::Arc;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

fn build(degree: usize, cycles: &[&[&[u32]]], p: u32) -> Arc<PermGroup> {
    let gens = cycles
        .iter()
        .map(|c| Perm::from_cycles(degree, c).expect("catalog permutation"))
        .collect();
    PermGroup::enumerate(degree, gens, p).expect("catalog group")
}

/// ℤ/n acting regularly on n points.
pub fn cyclic(n: usize, p: u32) -> Arc<PermGroup> {
    let cycle: Vec<u32> = (0..n as u32).collect();
    if n == 1 {
        return build(1, &[], p);
    }
    build(n, &[&[&cycle]], p)
}

/// S₃ generated by (0 1) and (0 1 2).
pub fn symmetric3(p: u32) -> Arc<PermGroup> {
    build(3, &[&[&[0, 1]], &[&[0, 1, 2]]], p)
}

/// The dihedral group of order 8, symmetries of a square.
pub fn dihedral4(p: u32) -> Arc<PermGroup> {
    build(4, &[&[&[0, 1, 2, 3]], &[&[1, 3]]], p)
}

/// Q₈ in its left regular representation; points 0..8 are
/// 1, −1, i, −i, j, −j, k, −k.
pub fn quaternion8(p: u32) -> Arc<PermGroup> {
    build(
        8,
        &[&[&[0, 2, 1, 3], &[4, 6, 5, 7]], &[&[0, 4, 1, 5], &[2, 7, 3, 6]]],
        p,
    )
}

/// A₄ generated by (0 1 2) and (1 2 3).
pub fn alternating4(p: u32) -> Arc<PermGroup> {
    build(4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]], p)
}

/// ℤ/2 × ℤ/4 on six points.
pub fn z2_x_z4(p: u32) -> Arc<PermGroup> {
    build(6, &[&[&[0, 1]], &[&[2, 3, 4, 5]]], p)
}

/// The characteristic-zero groups of the reassembly suite.
pub fn acceptance_groups() -> Vec<Arc<PermGroup>> {
    vec![
        cyclic(6, 0),
        symmetric3(0),
        dihedral4(0),
        quaternion8(0),
        alternating4(0),
        z2_x_z4(0),
    ]
}

/// Looks up a group by name: `Z<n>`, `S3`, `D4`, `Q8`, `A4`, `Z2xZ4`.
pub fn by_name(name: &str, p: u32) -> Result<Arc<PermGroup>> {
    let g = match name {
        "S3" => symmetric3(p),
        "D4" => dihedral4(p),
        "Q8" => quaternion8(p),
        "A4" => alternating4(p),
        "Z2xZ4" => z2_x_z4(p),
        _ => {
            let n: usize = name
                .strip_prefix('Z')
                .and_then(|n| n.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Parse(format!("unknown group {name:?}")))?;
            cyclic(n, p)
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_class_numbers() {
        let expect = [(6, 6), (6, 3), (8, 5), (8, 5), (12, 4), (8, 8)];
        for (g, (order, classes)) in acceptance_groups().iter().zip(expect) {
            assert_eq!((g.order(), g.all_classes().len()), (order, classes));
        }
    }

    #[test]
    fn quaternion_has_a_unique_involution() {
        let q = quaternion8(0);
        let involutions = (0..8).filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("Z5", 0).unwrap().order(), 5);
        assert_eq!(by_name("A4", 0).unwrap().order(), 12);
        assert!(by_name("Z0", 0).is_err());
        assert!(by_name("foo", 0).is_err());
    }
}
