//! Sector combinatorics over `BG`: the section `ι`, the isotypic pushforward
//! `m_*`, assembly of sector data into a virtual character, and the
//! reassembly round trip.
//!
//! A sector is a conjugacy class `σ` of cyclic subgroups of order `r` prime
//! to the characteristic, with a marked generator `s` identifying `σ ≅ μ_r`
//! through the character `χ(s) = ζ_r`. Its data are the rational numbers
//! `q_{σ,i}`, one per `χⁱ`-isotypic component.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use crate::charfun::{induce, isotypic_dim, ClassFunction};
use crate::cyclo::rational::Rational;
use crate::cyclo::Cyclotomic;
use crate::cyclo::{crt_idempotent, RatPoly};
use crate::error::{Error, Result};
use crate::groups::{CyclicSubgroupClass, PermGroup, SubgroupEmbedding};

/// One sector as supplied by the caller: the subgroup class id, an optional
/// marked generator (defaults to the class representative), and the nonzero
/// `q_{σ,i}` keyed by `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SectorEntry {
    pub sigma: usize,
    pub generator: Option<usize>,
    pub q: BTreeMap<usize, Rational>,
}

/// A validated sector with its marked generator and a full `q` vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub sigma: CyclicSubgroupClass,
    pub generator: usize,
    pub q: Vec<Rational>,
}

impl Sector {
    pub fn order(&self) -> usize {
        self.sigma.order
    }
}

/// Rational Euler characteristics `q_{σ,i}` for every sector of a group.
#[derive(Clone, Debug)]
pub struct SectorData {
    group: Arc<PermGroup>,
    sectors: Vec<Sector>,
}

impl SectorData {
    /// Validates that every class from [`PermGroup::cyclic_subgroup_classes`]
    /// appears exactly once, that marked generators generate a conjugate of
    /// the class, and that indices lie in `0..r`.
    pub fn new(group: Arc<PermGroup>, entries: Vec<SectorEntry>) -> Result<Self> {
        let classes = group.cyclic_subgroup_classes();
        let mut slots: Vec<Option<Sector>> = vec![None; classes.len()];
        for entry in entries {
            let sigma = classes
                .get(entry.sigma)
                .ok_or_else(|| Error::MalformedSectors(format!("unknown sector {}", entry.sigma)))?;
            let r = sigma.order;
            let generator = entry.generator.unwrap_or(sigma.generator);
            if generator >= group.order()
                || group.class_position(generator).is_none()
                || !sigma.classes.contains(&group.class_index(generator))
            {
                return Err(Error::MalformedSectors(format!(
                    "element {generator} does not generate a subgroup in sector {}",
                    entry.sigma
                )));
            }
            let mut q = vec![Rational::zero(); r];
            for (i, v) in entry.q {
                if i >= r {
                    return Err(Error::MalformedSectors(format!(
                        "index {i} out of range for sector of order {r}"
                    )));
                }
                q[i] = v;
            }
            let slot = &mut slots[entry.sigma];
            if slot.is_some() {
                return Err(Error::MalformedSectors(format!("sector {} given twice", entry.sigma)));
            }
            *slot = Some(Sector {
                sigma: sigma.clone(),
                generator,
                q,
            });
        }
        let sectors = slots
            .into_iter()
            .enumerate()
            .map(|(id, s)| s.ok_or_else(|| Error::MalformedSectors(format!("sector {id} missing"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SectorData { group, sectors })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    /// `q_{σ,i}` with `i` read modulo `r`.
    pub fn q(&self, sigma: usize, i: i64) -> Option<&Rational> {
        let s = self.sectors.get(sigma)?;
        Some(&s.q[i.rem_euclid(s.order() as i64) as usize])
    }

    /// Re-marks sector `sigma` with generator `sᵏ` and re-indexes its data by
    /// the inverse unit, `q'_{i} = q_{i·k⁻¹}`. The assembled character is
    /// unchanged.
    pub fn with_marking(&self, sigma: usize, k: i64) -> Result<SectorData> {
        let mut out = self.clone();
        let sector = out
            .sectors
            .get_mut(sigma)
            .ok_or_else(|| Error::MalformedSectors(format!("unknown sector {sigma}")))?;
        let r = sector.order() as i64;
        let k_inv = unit_inverse(k, r).ok_or(Error::NotCoprime { k, n: r as u32 })?;
        sector.generator = self.group.pow(sector.generator, k);
        sector.q = (0..r)
            .map(|i| self.sectors[sigma].q[((i * k_inv).rem_euclid(r)) as usize].clone())
            .collect();
        Ok(out)
    }
}

fn unit_inverse(k: i64, r: i64) -> Option<i64> {
    if r == 1 {
        return Some(0);
    }
    let g = k.extended_gcd(&r);
    (g.gcd == 1).then(|| g.x.rem_euclid(r))
}

/// The marked generator of a cyclic group built by
/// [`PermGroup::cyclic_subgroup`], or the identity for the trivial group.
pub fn marked_generator(cyclic: &PermGroup) -> usize {
    cyclic.generator_indices().first().copied().unwrap_or(0)
}

/// `⟨s⟩ ⊆ G` as a cyclic group whose element `k` is `sᵏ`.
pub fn sector_subgroup(group: &Arc<PermGroup>, s: usize) -> Result<SubgroupEmbedding> {
    group.cyclic_subgroup(s)
}

fn check_cyclic(cyclic: &PermGroup, s: usize) -> Result<usize> {
    let r = cyclic.element_order(s);
    if r != cyclic.order() {
        return Err(Error::InvalidEmbedding("element does not generate the group".into()));
    }
    let p = cyclic.characteristic() as usize;
    if p != 0 && r.is_multiple_of(p) {
        return Err(Error::NotPrimeToCharacteristic { order: r, p: p as u32 });
    }
    Ok(r)
}

/// Exponents `k` with `cyclic[k]`-th element equal to `sᵏ`, indexed by
/// element.
fn discrete_logs(cyclic: &PermGroup, s: usize) -> Vec<usize> {
    let mut log = vec![0; cyclic.order()];
    for (k, x) in cyclic.cyclic_elements(s).into_iter().enumerate() {
        log[x] = k;
    }
    log
}

/// `ι(a)` for `a ∈ ℚ(ζ_r)`: the virtual character of `⟨s⟩` with value
/// `galois(a, k)` at each generator `sᵏ` and zero at elements of smaller
/// order.
pub fn iota_of(cyclic: &Arc<PermGroup>, s: usize, a: &Cyclotomic) -> Result<ClassFunction> {
    let r = check_cyclic(cyclic, s)?;
    let a = a
        .lift(r as u32)
        .map_err(|_| Error::InvalidDatum(format!("{a} does not lie in the cyclotomic field of conductor {r}")))?;
    let log = discrete_logs(cyclic, s);
    let values = (0..cyclic.class_count())
        .map(|pos| {
            let k = log[cyclic.class(pos).representative] as i64;
            if k.gcd(&(r as i64)) == 1 || r == 1 {
                a.galois(k)
            } else {
                Ok(Cyclotomic::zero(r as u32))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(cyclic.clone(), values)
}

/// `ι(ζ_rⁱ)`, by extension by zero off the generators.
pub fn iota(cyclic: &Arc<PermGroup>, s: usize, i: i64) -> Result<ClassFunction> {
    let r = check_cyclic(cyclic, s)?;
    iota_of(cyclic, s, &Cyclotomic::zeta_pow(r as u32, i))
}

/// `ι(ζ_rⁱ)` as the polynomial `xⁱ·e_r mod xʳ − 1`, where `e_r` is the CRT
/// idempotent, read as the virtual character `Σ c_j χʲ`.
pub fn iota_from_idempotent(cyclic: &Arc<PermGroup>, s: usize, i: i64) -> Result<ClassFunction> {
    let r = check_cyclic(cyclic, s)?;
    let shift = RatPoly::monomial(Rational::from_integer(1.into()), i.rem_euclid(r as i64) as usize);
    let poly = (&shift * &crt_idempotent(r as u32)).rem(&RatPoly::x_pow_minus_one(r))?;
    let log = discrete_logs(cyclic, s);
    // Σ_j c_j χʲ at sᵏ is Σ_j c_j ζ_r^{jk}.
    ClassFunction::from_fn(cyclic.clone(), |x| {
        let k = log[x] as i64;
        let mut acc = Cyclotomic::zero(r as u32);
        for (j, c) in poly.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &Cyclotomic::zeta_pow(r as u32, j as i64 * k).scale(c);
            }
        }
        acc
    })
}

/// The projection `ℚ[x]/(xʳ − 1) → ℚ(ζ_r)` applied to a virtual character
/// of `⟨s⟩`: its value at `s`.
pub fn project(f: &ClassFunction, s: usize) -> Result<Cyclotomic> {
    check_cyclic(f.group(), s)?;
    Ok(f.value_at(s).expect("p-regular").clone())
}

/// `m_*`: the character of the `χⁱ`-isotypic part of `Res_⟨s⟩ V` with its
/// inherited `H`-action, `h ↦ (1/r) Σ_k ζ_r^{−ik}·V(h·sᵏ)`, for `s` central
/// in `H`.
pub fn m_push(v: &ClassFunction, s: usize, i: i64) -> Result<ClassFunction> {
    let h = v.group();
    if !(0..h.order()).all(|x| h.commute(x, s)) {
        return Err(Error::NotCentral);
    }
    let r = h.element_order(s);
    let p = h.characteristic() as usize;
    if p != 0 && r.is_multiple_of(p) {
        return Err(Error::NotPrimeToCharacteristic { order: r, p: p as u32 });
    }
    let weights: Vec<Cyclotomic> = (0..r as i64).map(|k| Cyclotomic::zeta_pow(r as u32, -i * k)).collect();
    let scale = Rational::new(1.into(), (r as i64).into());
    ClassFunction::from_fn(h.clone(), |x| {
        let mut acc = Cyclotomic::zero(r as u32);
        let mut y = x;
        for w in &weights {
            acc = &acc + &(v.value_at(y).expect("p-regular product") * w);
            y = h.mul(y, s);
        }
        acc.scale(&scale)
    })
}

/// The weight `r/|N_G(σ)|` of one sector. It equals the per-monomorphism
/// weight `(r/φ(r))/|C_G(σ)|` times the `φ(r)/[N_G(σ):C_G(σ)]` monomorphism
/// classes `μ_r → G` with image in `σ`.
pub fn sector_weight(sigma: &CyclicSubgroupClass) -> Rational {
    Rational::new((sigma.order as i64).into(), (sigma.normalizer_order as i64).into())
}

/// One sector's contribution `(r/|N_G(σ)|)·Ind_σ^G Σ_i q_{σ,i}·ι(ζ_rⁱ)`.
pub fn sector_contribution(group: &Arc<PermGroup>, sector: &Sector) -> Result<ClassFunction> {
    let r = sector.order();
    let emb = sector_subgroup(group, sector.generator)?;
    let s = marked_generator(&emb.sub);
    // Σ_i q_i ζ_rⁱ ∈ ℚ(ζ_r); ι is ℚ-linear.
    let mut a = Cyclotomic::zero(r as u32);
    for (i, q) in sector.q.iter().enumerate() {
        if !q.is_zero() {
            a = &a + &Cyclotomic::zeta_pow(r as u32, i as i64).scale(q);
        }
    }
    let local = iota_of(&emb.sub, s, &a)?;
    Ok(induce(&local, &emb)?.scale(&sector_weight(&sector.sigma)))
}

/// Assembles sector data into the virtual character
/// `Σ_σ Σ_i q_{σ,i}·(r/|N_G(σ)|)·Ind_σ^G ι(ζ_rⁱ)`.
pub fn assemble_sectors(data: &SectorData) -> Result<ClassFunction> {
    let mut acc = ClassFunction::zero(data.group.clone());
    for sector in &data.sectors {
        acc = acc.checked_add(&sector_contribution(&data.group, sector)?)?;
    }
    Ok(acc)
}

/// Reads sector data off a virtual character: `q_{σ,i}` is the dimension of
/// the `χⁱ`-isotypic part of `Res_σ V`.
pub fn sector_data(v: &ClassFunction) -> Result<SectorData> {
    let group = v.group().clone();
    let entries = group
        .cyclic_subgroup_classes()
        .into_iter()
        .map(|sigma| {
            let q = (0..sigma.order)
                .map(|i| Ok((i, isotypic_dim(v, &sigma, i as i64)?)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            Ok(SectorEntry {
                sigma: sigma.id,
                generator: None,
                q,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SectorData::new(group, entries)
}

/// `assemble_sectors(sector_data(V))`, which returns `V`.
pub fn reassemble(v: &ClassFunction) -> Result<ClassFunction> {
    assemble_sectors(&sector_data(v)?)
}
