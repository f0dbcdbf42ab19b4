//! The acceptance suites, each reduced to a pass/fail outcome with a short
//! summary. All comparisons are exact.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;

use crate::charfun::{character_table, induce, ClassFunction};
use crate::curve::{curve_euler_char, fixtures, invert_one_minus, local_term, RamifiedOrbit};
use crate::cyclo::rational::{int, rat, Rational};
use crate::cyclo::Cyclotomic;
use crate::error::Result;
use crate::groups::{catalog, PermGroup, SubgroupEmbedding};
use crate::lrr::{iota, iota_from_idempotent, m_push, marked_generator, project, reassemble, sector_subgroup};
use crate::oracle::{compare, ComparisonReport, MatrixGroup, MatrixGroupSpec};
use crate::random::{Lcg, VirtualCharacterSampler};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Wall time spent on the criterion, filled in by [`run_all`].
    pub elapsed: Duration,
}

impl CriterionOutcome {
    fn new(id: u32, name: &'static str, passed: bool, detail: String) -> Self {
        CriterionOutcome {
            id,
            name,
            passed,
            detail,
            elapsed: Duration::ZERO,
        }
    }

    fn from_result(id: u32, name: &'static str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Self::new(id, name, passed, detail),
            Err(e) => Self::new(id, name, false, format!("error: {e}")),
        }
    }
}

impl std::fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {:>2} {}: {} ({:.1?})",
            self.id, self.name, self.detail, self.elapsed
        )
    }
}

/// The groups and characteristics of the reassembly suite.
pub fn reassembly_cases() -> Vec<(String, Arc<PermGroup>)> {
    let mut cases: Vec<(String, Arc<PermGroup>)> = ["Z6", "S3", "D4", "Q8", "A4", "Z2xZ4"]
        .iter()
        .map(|name| (format!("{name} p=0"), catalog::by_name(name, 0).expect("catalog group")))
        .collect();
    for (name, p) in [("Z6", 2), ("Z6", 3), ("S3", 3)] {
        cases.push((
            format!("{name} p={p}"),
            catalog::by_name(name, p).expect("catalog group"),
        ));
    }
    cases
}

/// Runs the reassembly identity on `trials` random virtual characters and
/// returns the number that round-trip exactly.
pub fn reassembly_trials(group: &Arc<PermGroup>, trials: usize, seed: u64) -> Result<usize> {
    let sampler = VirtualCharacterSampler::new(group.clone())?;
    let mut rng = Lcg::new(seed);
    let mut ok = 0;
    for _ in 0..trials {
        let v = sampler.sample(&mut rng);
        if reassemble(&v)? == v {
            ok += 1;
        }
    }
    Ok(ok)
}

pub fn criterion_reassembly() -> CriterionOutcome {
    const TRIALS: usize = 100;
    let results: Vec<(String, Result<usize>)> = reassembly_cases()
        .into_par_iter()
        .map(|(name, g)| {
            let r = reassembly_trials(&g, TRIALS, 1);
            (name, r)
        })
        .collect();
    let mut passed = true;
    let mut parts = Vec::new();
    for (name, r) in results {
        match r {
            Ok(k) => {
                passed &= k == TRIALS;
                parts.push(format!("{name} {k}/{TRIALS}"));
            }
            Err(e) => {
                passed = false;
                parts.push(format!("{name} error: {e}"));
            }
        }
    }
    CriterionOutcome::new(1, "reassembly identity", passed, parts.join(", "))
}

/// The oracle grid: `cyclic(1..=12)`, `dihedral(3, 5, 7)`, `d ∈ −6..=6`.
pub fn oracle_specs() -> Vec<MatrixGroupSpec> {
    (1..=12)
        .map(MatrixGroupSpec::Cyclic)
        .chain([3, 5, 7].into_iter().map(MatrixGroupSpec::Dihedral))
        .collect()
}

pub fn oracle_grid() -> Result<Vec<ComparisonReport>> {
    let groups = oracle_specs()
        .into_iter()
        .map(MatrixGroup::build)
        .collect::<Result<Vec<_>>>()?;
    let cells: Vec<(usize, i64)> = (0..groups.len()).flat_map(|g| (-6..=6).map(move |d| (g, d))).collect();
    cells.into_par_iter().map(|(g, d)| compare(&groups[g], d)).collect()
}

pub fn criterion_oracle_grid(grid: &Result<Vec<ComparisonReport>>) -> CriterionOutcome {
    let name = "oracle grid";
    let grid = match grid {
        Ok(g) => g,
        Err(e) => return CriterionOutcome::new(2, name, false, format!("error: {e}")),
    };
    let equal = grid.iter().filter(|r| r.equal).count();
    let sectors = grid.iter().filter(|r| r.sector_route_equal).count();
    let orbits = grid.iter().filter(|r| r.orbit_checks && r.bookkeeping).count();
    let n = grid.len();
    let failures: Vec<String> = grid
        .iter()
        .filter(|r| !r.equal)
        .map(|r| format!("{} d={}", r.spec, r.d))
        .collect();
    let mut detail = format!("{equal}/{n} cells equal; sector route {sectors}/{n}; orbit checks {orbits}/{n}");
    if !failures.is_empty() {
        detail.push_str(&format!("; mismatches: {}", failures.join(", ")));
    }
    CriterionOutcome::new(2, name, equal == n && sectors == n && orbits == n, detail)
}

pub fn criterion_hyperelliptic() -> CriterionOutcome {
    CriterionOutcome::from_result(
        3,
        "hyperelliptic fixtures",
        (|| {
            let g = MatrixGroup::build(MatrixGroupSpec::Cyclic(2))?;
            let ag = g.abstract_group().clone();
            let trivial = ClassFunction::trivial(ag.clone());
            let sign = ClassFunction::cyclic_character(ag.clone(), marked_generator(&ag), 1)?;
            let r0 = compare(&g, 0)?;
            let r2 = compare(&g, -2)?;
            let fixture = curve_euler_char(&fixtures::hyperelliptic_z2())?;
            let ok0 = r0.equal && r0.lhs == trivial;
            let ok2 = r2.equal && r2.lhs == -&sign;
            let okf = fixture == ClassFunction::trivial(fixture.group().clone());
            Ok((
                ok0 && ok2 && okf,
                format!("d=0 → {}, d=−2 → {}, datum → {}", r0.rhs, r2.rhs, fixture),
            ))
        })(),
    )
}

pub fn criterion_wild() -> CriterionOutcome {
    CriterionOutcome::from_result(
        4,
        "wild fixture",
        (|| {
            let mut passed = true;
            let mut parts = Vec::new();
            for p in [2u32, 3, 5] {
                let datum = fixtures::wild_cyclic(p);
                let chi = curve_euler_char(&datum)?;
                let ok = chi.values().len() == 1 && chi == ClassFunction::trivial(datum.group().clone());
                passed &= ok;
                parts.push(format!("p={p} → {chi}"));
            }
            Ok((passed, parts.join(", ")))
        })(),
    )
}

/// `m_*(kH/|H| ⊗ χⁱ) = (1/|H|)·Ind_σ^H χⁱ` with `H = C_G(σ)`.
pub fn m_push_unit_identity(group: &Arc<PermGroup>) -> Result<(usize, usize)> {
    let mut checked = 0;
    let mut ok = 0;
    for sigma in group.cyclic_subgroup_classes() {
        let centralizer = group.centralizer(&sigma)?;
        let h = centralizer.sub.clone();
        let s = h.index_of(&sigma.generator_perm).expect("generator centralizes itself");
        let sub = sector_subgroup(&h, s)?;
        let unit = ClassFunction::normalized_regular(h.clone());
        for i in 0..sigma.order as i64 {
            let chi = ClassFunction::cyclic_character(sub.sub.clone(), marked_generator(&sub.sub), i)?;
            let rhs = induce(&chi, &sub)?.scale(&rat(1, h.order() as i64));
            checked += 1;
            if m_push(&unit, s, i)? == rhs {
                ok += 1;
            }
        }
    }
    Ok((ok, checked))
}

pub fn criterion_m_push() -> CriterionOutcome {
    CriterionOutcome::from_result(
        5,
        "m_* unit identity",
        (|| {
            let (mut ok, mut total) = (0, 0);
            for g in catalog::acceptance_groups() {
                let (a, b) = m_push_unit_identity(&g)?;
                ok += a;
                total += b;
            }
            Ok((ok == total, format!("{ok}/{total} (σ, i) pairs")))
        })(),
    )
}

/// `ι` on `ℤ/r`: extension by zero agrees with the idempotent construction,
/// the projection recovers `ζ_rⁱ`, and the value at each generator `sᵏ` is
/// the Galois conjugate by `k`.
pub fn iota_section_holds(r: u32) -> Result<bool> {
    let g = catalog::cyclic(r as usize, 0);
    let s = marked_generator(&g);
    let powers = g.cyclic_elements(s);
    for i in 0..r as i64 {
        let direct = iota(&g, s, i)?;
        if direct != iota_from_idempotent(&g, s, i)? {
            return Ok(false);
        }
        let zeta = Cyclotomic::zeta_pow(r, i);
        if project(&direct, s)? != zeta {
            return Ok(false);
        }
        for (k, &x) in powers.iter().enumerate() {
            let k = k as i64;
            let expected = if k.gcd(&(r as i64)) == 1 {
                zeta.galois(k)?
            } else {
                Cyclotomic::zero(1)
            };
            if r > 1 && direct.value_at(x) != Some(&expected) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn criterion_iota() -> CriterionOutcome {
    CriterionOutcome::from_result(
        6,
        "ι section",
        (|| {
            let results = (1..=24u32)
                .into_par_iter()
                .map(iota_section_holds)
                .collect::<Result<Vec<_>>>()?;
            let ok = results.iter().filter(|&&b| b).count();
            Ok((ok == 24, format!("{ok}/24 orders r ≤ 24")))
        })(),
    )
}

/// `(1 − χ(h))·(1/(1 − χ))(h) = 1` at every `h ≠ 1` for every faithful
/// character `χ` of `ℤ/m`.
pub fn lemma_pointwise(m: u32) -> Result<bool> {
    let g = catalog::cyclic(m as usize, 0);
    let s = marked_generator(&g);
    for u in (1..=m as i64).filter(|u| u.gcd(&(m as i64)) == 1) {
        let chi = ClassFunction::cyclic_character(g.clone(), s, u)?;
        let inv = invert_one_minus(&chi, m as usize)?;
        for h in 1..g.order() {
            let one_minus = &Cyclotomic::one(1) - chi.value_at(h).expect("char 0");
            if !(&one_minus * inv.value_at(h).expect("char 0")).is_one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn criterion_lemma() -> CriterionOutcome {
    CriterionOutcome::from_result(
        7,
        "inverse of 1 − χ",
        (|| {
            let results = (1..=12u32).map(lemma_pointwise).collect::<Result<Vec<_>>>()?;
            let ok = results.iter().filter(|&&b| b).count();
            Ok((ok == 12, format!("{ok}/12 orders m ≤ 12")))
        })(),
    )
}

/// A random valid orbit with tame index `e_t`. Even trials are tame in
/// characteristic 0 (`G_x = ℤ/e_t`); odd trials are wild, with
/// `G_x = ℤ/(e_t·p)` in characteristic `p ∤ e_t`.
pub fn random_orbit(e_t: usize, rng: &mut Lcg, wild: bool) -> Result<RamifiedOrbit> {
    let p = if wild {
        let candidates: Vec<u32> = [2u32, 3, 5, 7]
            .into_iter()
            .filter(|&p| !e_t.is_multiple_of(p as usize))
            .collect();
        candidates[rng.below(candidates.len() as u64) as usize]
    } else {
        0
    };
    let e = if wild { e_t * p as usize } else { e_t };
    let g = catalog::cyclic(e, p);
    let s = marked_generator(&g);
    let scale = (e / e_t) as i64;
    let units: Vec<i64> = (1..=e_t as i64).filter(|u| u.gcd(&(e_t as i64)) == 1).collect();
    let u = units[rng.below(units.len() as u64) as usize];
    let conormal = ClassFunction::cyclic_character(g.clone(), s, u * scale)?;
    let rank = 1 + rng.below(4);
    let mut fiber = ClassFunction::zero(g.clone());
    for _ in 0..rank {
        let j = rng.below(e as u64) as i64;
        fiber = fiber.checked_add(&ClassFunction::cyclic_character(g.clone(), s, j)?)?;
    }
    RamifiedOrbit::new(SubgroupEmbedding::identity(g), e, e_t, fiber, conormal)
}

pub fn criterion_local_dimension() -> CriterionOutcome {
    CriterionOutcome::from_result(
        8,
        "local term dimension",
        (|| {
            let mut rng = Lcg::new(8);
            let (mut ok, mut total) = (0, 0);
            for e_t in 1..=8usize {
                for trial in 0..50 {
                    let orbit = random_orbit(e_t, &mut rng, trial % 2 == 1)?;
                    let rank = orbit.fiber().dimension().to_rational().expect("integer rank");
                    let expected = -rank * Rational::new(((e_t - 1) as i64).into(), 2.into());
                    total += 1;
                    if local_term(&orbit)?.dimension() == &Cyclotomic::from_rational(expected, 1) {
                        ok += 1;
                    }
                }
            }
            Ok((ok == total, format!("{ok}/{total} random orbits, e_t ∈ 1..=8")))
        })(),
    )
}

pub fn criterion_hrr() -> CriterionOutcome {
    CriterionOutcome::from_result(
        9,
        "tame Riemann–Roch",
        (|| {
            let groups = oracle_specs()
                .into_iter()
                .map(MatrixGroup::build)
                .collect::<Result<Vec<_>>>()?;
            let (mut ok, mut total) = (0, 0);
            for g in &groups {
                for d in -6..=6i64 {
                    let datum = crate::oracle::extract_curve_datum(g, d)?;
                    let hrr = crate::curve::chi_hrr(d, 1, 0, g.order(), datum.orbits())?;
                    total += 1;
                    if hrr == int(d + 1) && datum.chi_global()? == int(d + 1) {
                        ok += 1;
                    }
                }
            }
            Ok((ok == total, format!("{ok}/{total} oracle data")))
        })(),
    )
}

pub fn criterion_integrality(grid: &Result<Vec<ComparisonReport>>) -> CriterionOutcome {
    let name = "integrality and tables";
    let grid = match grid {
        Ok(g) => g,
        Err(e) => return CriterionOutcome::new(10, name, false, format!("error: {e}")),
    };
    let with_table: Vec<_> = grid.iter().filter_map(|r| r.decomposition.as_ref()).collect();
    let integral = with_table.iter().filter(|d| d.integral).count();
    let mut tables_ok = true;
    let mut names = Vec::new();
    for name in ["S3", "D4", "Q8", "A4", "Z6"] {
        let g = catalog::by_name(name, 0).expect("catalog group");
        let ok = character_table(&g)
            .map(|t| t.rows_orthonormal() && t.columns_orthogonal())
            .unwrap_or(false);
        tables_ok &= ok;
        names.push(format!("{name} {}", if ok { "ok" } else { "bad" }));
    }
    CriterionOutcome::new(
        10,
        name,
        integral == with_table.len() && tables_ok,
        format!(
            "{integral}/{} decompositions integral; orthogonality: {}",
            with_table.len(),
            names.join(", ")
        ),
    )
}

fn timed(f: impl FnOnce() -> CriterionOutcome) -> CriterionOutcome {
    let start = Instant::now();
    let mut outcome = f();
    outcome.elapsed = start.elapsed();
    outcome
}

/// Every criterion, in order. The oracle grid is computed once and shared;
/// its time is charged to criterion 2.
pub fn run_all() -> Vec<CriterionOutcome> {
    let start = Instant::now();
    let grid = oracle_grid();
    let grid_time = start.elapsed();
    let mut grid_outcome = timed(|| criterion_oracle_grid(&grid));
    grid_outcome.elapsed += grid_time;
    vec![
        timed(criterion_reassembly),
        grid_outcome,
        timed(criterion_hyperelliptic),
        timed(criterion_wild),
        timed(criterion_m_push),
        timed(criterion_iota),
        timed(criterion_lemma),
        timed(criterion_local_dimension),
        timed(criterion_hrr),
        timed(|| criterion_integrality(&grid)),
    ]
}
