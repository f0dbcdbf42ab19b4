//! Seeded random virtual characters.
//!
//! The generator is the 64-bit linear congruential generator
//! `x ← 6364136223846793005·x + 1442695040888963407 (mod 2⁶⁴)`, and each
//! coefficient is `((x >> 33) mod 11) − 5 ∈ [−5, 5]`, so suites are
//! reproducible from the seed alone.

use std::sync::Arc;

use crate::charfun::{character_table, induce, ClassFunction};
use crate::error::{Error, Result};
use crate::groups::PermGroup;
use crate::lrr::marked_generator;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// A coefficient in `[−5, 5]`.
    pub fn coefficient(&mut self) -> i64 {
        ((self.next_u64() >> 33) % 11) as i64 - 5
    }

    /// A value in `0..n`, for `n > 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        (self.next_u64() >> 33) % n
    }
}

/// Integer combinations of a fixed basis of virtual characters: the
/// irreducible characters when a character table is available, otherwise
/// the characters `Ind_⟨g⟩^G χʲ` over the (`p`-regular) class
/// representatives `g` and `0 ≤ j < ord g`.
#[derive(Clone, Debug)]
pub struct VirtualCharacterSampler {
    group: Arc<PermGroup>,
    basis: Vec<ClassFunction>,
    from_table: bool,
}

impl VirtualCharacterSampler {
    pub fn new(group: Arc<PermGroup>) -> Result<Self> {
        match character_table(&group) {
            Ok(table) => Ok(VirtualCharacterSampler {
                basis: table.rows().to_vec(),
                group,
                from_table: true,
            }),
            Err(Error::TableUnavailable(_)) => Self::induced(group),
            Err(e) => Err(e),
        }
    }

    /// The induced-from-cyclic spanning set, regardless of table
    /// availability.
    pub fn induced(group: Arc<PermGroup>) -> Result<Self> {
        let mut basis = Vec::new();
        for pos in 0..group.class_count() {
            let g = group.class(pos).representative;
            let emb = group.cyclic_subgroup(g)?;
            let s = marked_generator(&emb.sub);
            for j in 0..emb.sub.order() as i64 {
                let chi = ClassFunction::cyclic_character(emb.sub.clone(), s, j)?;
                basis.push(induce(&chi, &emb)?);
            }
        }
        Ok(VirtualCharacterSampler {
            group,
            basis,
            from_table: false,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn basis(&self) -> &[ClassFunction] {
        &self.basis
    }

    pub fn uses_table(&self) -> bool {
        self.from_table
    }

    /// `Σ c_i·b_i` with one fresh coefficient per basis element, in basis
    /// order.
    pub fn sample(&self, rng: &mut Lcg) -> ClassFunction {
        let mut acc = ClassFunction::zero(self.group.clone());
        for b in &self.basis {
            let c = rng.coefficient();
            if c != 0 {
                acc = acc
                    .checked_add(&b.scale(&crate::cyclo::rational::int(c)))
                    .expect("same group");
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn lcg_sequence() {
        let mut rng = Lcg::new(0);
        assert_eq!(rng.next_u64(), INCREMENT);
        assert_eq!(
            rng.next_u64(),
            INCREMENT.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT)
        );
        let mut rng = Lcg::new(1);
        for _ in 0..1000 {
            assert!((-5..=5).contains(&rng.coefficient()));
        }
    }

    #[test]
    fn samples_are_deterministic_virtual_characters() {
        let g = catalog::symmetric3(0);
        let sampler = VirtualCharacterSampler::new(g.clone()).unwrap();
        assert!(sampler.uses_table());
        let a = sampler.sample(&mut Lcg::new(7));
        let b = sampler.sample(&mut Lcg::new(7));
        assert_eq!(a, b);
        assert!(a.is_galois_stable());

        let wild = catalog::cyclic(6, 3);
        let sampler = VirtualCharacterSampler::new(wild).unwrap();
        assert!(!sampler.uses_table());
        assert_eq!(sampler.basis().len(), 1 + 2);
    }
}
