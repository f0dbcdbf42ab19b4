//! Equivariant Euler characteristics of vector bundles on curves.
//!
//! For a curve `X` with an action of `G` (order `n`) and a `G`-bundle `E`,
//!
//! ```text
//! χ_G(X, E) = (χ(X, E) + (rk E/2)·Σ_x (e_x^t − 1))·kG/n
//!           + Σ_x (e_x/n)·Ind_{G_x}^G E_x/(1 − N_x^∨),
//! ```
//!
//! summed over the points with nontrivial stabilizer. Input is given per
//! orbit: an orbit with stabilizer `G_x` has `n/e_x` points whose induced
//! local terms agree, so the second sum becomes `Σ_orbits Ind_{G_x}^G A_x`.

pub mod fixtures;

use std::sync::Arc;

use num_traits::Zero;

use crate::charfun::{induce, same_group, ClassFunction};
use crate::cyclo::rational::Rational;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::{PermGroup, SubgroupEmbedding};
use crate::lrr::{SectorData, SectorEntry};

/// Ramification data of one orbit of points with nontrivial stabilizer.
#[derive(Clone, Debug)]
pub struct RamifiedOrbit {
    stabilizer: SubgroupEmbedding,
    e: usize,
    e_t: usize,
    fiber: ClassFunction,
    conormal: ClassFunction,
}

impl RamifiedOrbit {
    /// Checks `e = |G_x|`, `e_t | e` with `e/e_t` a power of the
    /// characteristic, `gcd(e_t, p) = 1`, and that the conormal character is
    /// one-dimensional of exact order `e_t`.
    pub fn new(
        stabilizer: SubgroupEmbedding,
        e: usize,
        e_t: usize,
        fiber: ClassFunction,
        conormal: ClassFunction,
    ) -> Result<Self> {
        let sub = &stabilizer.sub;
        let p = sub.characteristic() as usize;
        if e != sub.order() {
            return Err(Error::InvalidOrbit(format!(
                "e = {e} but the stabilizer has order {}",
                sub.order()
            )));
        }
        if e_t == 0 || !e.is_multiple_of(e_t) {
            return Err(Error::InvalidOrbit(format!("e_t = {e_t} does not divide e = {e}")));
        }
        if !is_power_of(e / e_t, p) {
            return Err(Error::InvalidOrbit(format!(
                "e/e_t = {} is not a power of the characteristic",
                e / e_t
            )));
        }
        if p != 0 && e_t.is_multiple_of(p) {
            return Err(Error::InvalidOrbit(format!(
                "e_t = {e_t} is divisible by the characteristic"
            )));
        }
        if !same_group(fiber.group(), sub) || !same_group(conormal.group(), sub) {
            return Err(Error::InvalidOrbit("characters must live on the stabilizer".into()));
        }
        if !conormal.dimension().is_one() {
            return Err(Error::InvalidOrbit("conormal character must be one-dimensional".into()));
        }
        if character_order(&conormal) != Some(e_t) {
            return Err(Error::InvalidOrbit(format!(
                "conormal character does not have order e_t = {e_t}"
            )));
        }
        Ok(RamifiedOrbit {
            stabilizer,
            e,
            e_t,
            fiber,
            conormal,
        })
    }

    pub fn stabilizer(&self) -> &SubgroupEmbedding {
        &self.stabilizer
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn e_t(&self) -> usize {
        self.e_t
    }

    pub fn fiber(&self) -> &ClassFunction {
        &self.fiber
    }

    pub fn conormal(&self) -> &ClassFunction {
        &self.conormal
    }

    /// Number of points in the orbit, `n/e`.
    pub fn size(&self) -> usize {
        self.stabilizer.ambient.order() / self.e
    }

    pub fn is_tame(&self) -> bool {
        self.e == self.e_t
    }
}

fn is_power_of(mut m: usize, p: usize) -> bool {
    if p == 0 {
        return m == 1;
    }
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Smallest `m ≥ 1` with `χᵐ` trivial, for a class function whose values
/// are roots of unity; `None` if there is none up to the group exponent.
fn character_order(chi: &ClassFunction) -> Option<usize> {
    let trivial = ClassFunction::trivial(chi.group().clone());
    let exp = chi.group().exponent();
    (1..=exp).find(|&m| chi.pow(m as u32) == trivial)
}

/// How `χ(X, E)` is supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlobalChi {
    Direct(Rational),
    /// Tame Riemann–Roch data: `deg E` and the genus of `Y = X/G`.
    Hrr {
        degree: i64,
        genus_quotient: u64,
    },
}

/// A `G`-bundle on a curve, described by its global Euler characteristic and
/// its ramified orbits.
#[derive(Clone, Debug)]
pub struct CurveDatum {
    group: Arc<PermGroup>,
    rank: u32,
    chi: GlobalChi,
    orbits: Vec<RamifiedOrbit>,
}

impl CurveDatum {
    pub fn new(group: Arc<PermGroup>, rank: u32, chi: GlobalChi, orbits: Vec<RamifiedOrbit>) -> Result<Self> {
        for orbit in &orbits {
            if !same_group(&orbit.stabilizer.ambient, &group) {
                return Err(Error::InvalidDatum(
                    "orbit stabilizer is not a subgroup of the datum's group".into(),
                ));
            }
            if orbit.fiber.dimension() != &Cyclotomic::from_integer(rank as i64, 1) {
                return Err(Error::InvalidDatum(format!(
                    "fiber dimension {} differs from rank {rank}",
                    orbit.fiber.dimension()
                )));
            }
        }
        if matches!(chi, GlobalChi::Hrr { .. }) && orbits.iter().any(|o| !o.is_tame()) {
            return Err(Error::InvalidDatum("Riemann–Roch mode needs tame ramification".into()));
        }
        Ok(CurveDatum {
            group,
            rank,
            chi,
            orbits,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn characteristic(&self) -> u32 {
        self.group.characteristic()
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn chi_source(&self) -> &GlobalChi {
        &self.chi
    }

    pub fn orbits(&self) -> &[RamifiedOrbit] {
        &self.orbits
    }

    /// `χ(X, E)`, computed by [`chi_hrr`] in Riemann–Roch mode.
    pub fn chi_global(&self) -> Result<Rational> {
        match &self.chi {
            GlobalChi::Direct(q) => Ok(q.clone()),
            GlobalChi::Hrr { degree, genus_quotient } => {
                chi_hrr(*degree, self.rank, *genus_quotient, self.group.order(), &self.orbits)
            }
        }
    }
}

/// `1/(1 − χ)` on the classes where `χ ≠ 1`, for a character of order `m`:
/// `−(1/m)·Σ_{d=1}^{m−1} d·χᵈ`.
pub fn invert_one_minus(chi: &ClassFunction, m: usize) -> Result<ClassFunction> {
    let p = chi.characteristic() as usize;
    if p != 0 && m.is_multiple_of(p) {
        return Err(Error::NotPrimeToCharacteristic { order: m, p: p as u32 });
    }
    if !chi.dimension().is_one() || character_order(chi) != Some(m) {
        return Err(Error::InvalidOrbit(format!("character does not have order {m}")));
    }
    let mut acc = ClassFunction::zero(chi.group().clone());
    let mut power = chi.clone();
    for d in 1..m {
        acc = acc.checked_add(&power.scale(&Rational::from_integer((d as i64).into())))?;
        power = power.checked_mul(chi)?;
    }
    Ok(acc.scale(&Rational::new((-1).into(), (m as i64).into())))
}

/// `A_x = E_x/(1 − N_x^∨)`, of dimension `−rk·(e_t − 1)/2`.
pub fn local_term(orbit: &RamifiedOrbit) -> Result<ClassFunction> {
    orbit.fiber.checked_mul(&invert_one_minus(&orbit.conormal, orbit.e_t)?)
}

/// `Σ_x (e_x^t − 1) = Σ_orbits (n/e)(e_t − 1)`.
pub fn tame_ramification_sum(orbits: &[RamifiedOrbit]) -> usize {
    orbits.iter().map(|o| o.size() * (o.e_t - 1)).sum()
}

/// `χ(X, E) = deg E + rk E·(n(1 − g_Y) − ½·Σ_x (e_x − 1))` for tame actions.
pub fn chi_hrr(degree: i64, rank: u32, genus_quotient: u64, n: usize, orbits: &[RamifiedOrbit]) -> Result<Rational> {
    if let Some(o) = orbits.iter().find(|o| !o.is_tame()) {
        return Err(Error::InvalidDatum(format!(
            "wild orbit (e = {}, e_t = {}) in Riemann–Roch mode",
            o.e, o.e_t
        )));
    }
    let ramification: i64 = orbits.iter().map(|o| (o.size() * (o.e - 1)) as i64).sum();
    let euler = Rational::from_integer((n as i64 * (1 - genus_quotient as i64)).into())
        - Rational::new(ramification.into(), 2.into());
    Ok(Rational::from_integer(degree.into()) + euler * Rational::from_integer((rank as i64).into()))
}

/// The equivariant Euler characteristic as a class function on the
/// (`p`-regular classes of the) group.
pub fn curve_euler_char(datum: &CurveDatum) -> Result<ClassFunction> {
    let group = datum.group.clone();
    let correction = Rational::new(
        (datum.rank as i64 * tame_ramification_sum(&datum.orbits) as i64).into(),
        2.into(),
    );
    let mut acc = ClassFunction::normalized_regular(group).scale(&(datum.chi_global()? + correction));
    for orbit in &datum.orbits {
        acc = acc.checked_add(&induce(&local_term(orbit)?, &orbit.stabilizer)?)?;
    }
    Ok(acc)
}

/// `q_{σ,i}` for all `i` contributed by one orbit: the sum over points `y`
/// of the orbit fixed by the marked generator `s` of `dim (A_y)^{χⁱ}`. With
/// `y = t·x`, the point is fixed iff `t⁻¹st ∈ G_x`, and `A_y` at `s` is
/// `A_x` at `t⁻¹st`. `local` is [`local_term`] of the orbit.
pub fn orbit_sector_row(orbit: &RamifiedOrbit, local: &ClassFunction, s: usize) -> Result<Vec<Rational>> {
    let g = &orbit.stabilizer.ambient;
    let sub = &orbit.stabilizer.sub;
    let r = g.element_order(s);
    let mut preimage = vec![None; g.order()];
    for (h, &image) in orbit.stabilizer.map.iter().enumerate() {
        preimage[image] = Some(h);
    }
    // Each fixed point is reached by e choices of t.
    let mut hits = vec![0i64; sub.order()];
    for t in 0..g.order() {
        if let Some(h) = preimage[g.conjugate(s, t)] {
            hits[h] += 1;
        }
    }
    // w_k = Σ_h hits(h)·A_x(hᵏ); then q_i = (1/(r·e)) Σ_k ζ_r^{−ik} w_k.
    let conductor = local.conductor();
    let mut w = vec![Cyclotomic::zero(conductor); r];
    for (h, &count) in hits.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let mut x = 0;
        for wk in w.iter_mut() {
            let v = local
                .value_at(x)
                .ok_or_else(|| Error::Internal("p-singular power".into()))?;
            *wk = &*wk + &v.scale(&Rational::from_integer(count.into()));
            x = sub.mul(x, h);
        }
    }
    let norm = Rational::new(1.into(), ((r * orbit.e) as i64).into());
    (0..r as i64)
        .map(|i| {
            let mut acc = Cyclotomic::zero(conductor);
            for (k, wk) in w.iter().enumerate() {
                acc = &acc + &(wk * &Cyclotomic::zeta_pow(r as u32, -i * k as i64));
            }
            acc.scale(&norm)
                .to_rational()
                .ok_or_else(|| Error::NotRational(format!("sector dimension {acc} for i = {i}")))
        })
        .collect()
}

/// Number of points of the orbit fixed by `s`: `#{t·G_x : t⁻¹st ∈ G_x}`.
pub fn fixed_points_in_orbit(orbit: &RamifiedOrbit, s: usize) -> usize {
    let g = &orbit.stabilizer.ambient;
    let mut inside = vec![false; g.order()];
    for &image in &orbit.stabilizer.map {
        inside[image] = true;
    }
    (0..g.order()).filter(|&t| inside[g.conjugate(s, t)]).count() / orbit.e
}

/// Both sides of `|X^s ∩ G·x|/|C_G(s)| = Σ_c 1/|C_{G_x}(c)|`, the sum over the
/// `G_x`-classes `c` contained in the `G`-class of `s`. When that
/// intersection is a single class this is `1/|C_{G_x}(s)|`.
pub fn orbit_fixed_point_identity(orbit: &RamifiedOrbit, s: usize) -> (Rational, Rational) {
    let g = &orbit.stabilizer.ambient;
    let sub = &orbit.stabilizer.sub;
    let centralizer = (g.order() / g.all_classes()[g.class_index(s)].size) as i64;
    let lhs = Rational::new((fixed_points_in_orbit(orbit, s) as i64).into(), centralizer.into());
    let target = g.class_index(s);
    let rhs = sub
        .all_classes()
        .iter()
        .filter(|c| g.class_index(orbit.stabilizer.map[c.representative]) == target)
        .map(|c| Rational::new((c.size as i64).into(), (sub.order() as i64).into()))
        .fold(Rational::zero(), |a, b| a + b);
    (lhs, rhs)
}

fn sector_entries(group: &Arc<PermGroup>, orbits: &[RamifiedOrbit], geometric: Rational) -> Result<Vec<SectorEntry>> {
    let locals = orbits.iter().map(local_term).collect::<Result<Vec<_>>>()?;
    group
        .cyclic_subgroup_classes()
        .into_iter()
        .map(|sigma| {
            let mut entry = SectorEntry {
                sigma: sigma.id,
                generator: None,
                q: Default::default(),
            };
            if sigma.order == 1 {
                entry.q.insert(0, geometric.clone());
                return Ok(entry);
            }
            let mut q = vec![Rational::zero(); sigma.order];
            for (orbit, local) in orbits.iter().zip(&locals) {
                for (acc, v) in q.iter_mut().zip(orbit_sector_row(orbit, local, sigma.generator)?) {
                    *acc += v;
                }
            }
            entry.q.extend(q.into_iter().enumerate().filter(|(_, v)| !v.is_zero()));
            Ok(entry)
        })
        .collect()
}

/// Sector data read off the fixed loci: `q_{1,0} = χ(X, E)` and, for
/// `σ ≠ 1`, the isotypic dimensions of the local terms summed over `X^σ`.
/// Assembling it reproduces [`curve_euler_char`].
pub fn curve_sector_data(datum: &CurveDatum) -> Result<SectorData> {
    let entries = sector_entries(&datum.group, &datum.orbits, datum.chi_global()?)?;
    SectorData::new(datum.group.clone(), entries)
}

/// The nontrivial sectors contributed by a single orbit; assembling them
/// gives `Ind A_x` minus its geometric part.
pub fn orbit_sector_data(orbit: &RamifiedOrbit) -> Result<SectorData> {
    let group = orbit.stabilizer.ambient.clone();
    let entries = sector_entries(&group, std::slice::from_ref(orbit), Rational::zero())?;
    SectorData::new(group, entries)
}
