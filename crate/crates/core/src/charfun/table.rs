//! Irreducible character tables by the Dixon–Schneider method.
//!
//! The class-multiplication coefficients `a_{jrs}` give commuting matrices
//! `M_j` whose common eigenvectors are the central characters
//! `ω_χ(C_s) = |C_s|·χ(g_s)/χ(1)`. We split `F_ℓⁿ` into common eigenspaces
//! modulo a prime `ℓ ≡ 1 (mod exp G)` with `ℓ > 2√|G|`, recover degrees from
//! the orthogonality relation, and lift each value to ℚ(ζ_e) through the
//! eigenvalue multiplicities `m_k = (1/e) Σ_t χ(gᵗ)·z^{−kt}`.

use std::sync::Arc;

use super::{inner_product, same_group, ClassFunction};
use crate::cyclo::rational::{is_integer, is_prime, prime_factors, Rational};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::PermGroup;
use crate::limits::DEFAULT_MAX_TABLE_ORDER;

#[derive(Clone, Debug)]
pub struct TableOptions {
    /// Largest group order accepted.
    pub max_order: usize,
    /// Largest multiplier `t` tried in the prime search `ℓ = t·e + 1`.
    pub prime_search_limit: u64,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            max_order: DEFAULT_MAX_TABLE_ORDER,
            prime_search_limit: 100_000,
        }
    }
}

/// The irreducible characters of a group in characteristic zero, sorted by
/// degree and then by descending value vectors (so the trivial character
/// comes first).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<PermGroup>,
    rows: Vec<ClassFunction>,
    prime: u64,
}

/// Multiplicities `⟨f, χ_i⟩` against the rows of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub multiplicities: Vec<Rational>,
    pub integral: bool,
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    /// The prime the table was computed modulo.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|r| r.dimension().to_rational().expect("degrees are integers"))
            .collect()
    }

    pub fn decompose(&self, f: &ClassFunction) -> Result<Decomposition> {
        if !same_group(f.group(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        let multiplicities = self
            .rows
            .iter()
            .map(|chi| {
                let m = inner_product(f, chi)?;
                m.to_rational()
                    .ok_or_else(|| Error::NotRational(format!("multiplicity {m}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let integral = multiplicities.iter().all(is_integer);
        Ok(Decomposition {
            multiplicities,
            integral,
        })
    }

    /// `⟨χ_i, χ_j⟩ = δ_ij` for all rows.
    pub fn rows_orthonormal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, a)| {
            self.rows.iter().enumerate().all(|(j, b)| {
                let ip = inner_product(a, b).expect("same group");
                if i == j {
                    ip.is_one()
                } else {
                    ip.is_zero()
                }
            })
        })
    }

    /// `Σ_χ χ(g_a)·conj χ(g_b) = δ_ab·|C_G(g_a)|`.
    pub fn columns_orthogonal(&self) -> bool {
        let k = self.group.class_count();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let mut acc = Cyclotomic::zero(1);
                for chi in &self.rows {
                    acc = &acc + &(&chi.values()[a] * &chi.values()[b].conj());
                }
                let expected = if a == b {
                    (self.group.order() / self.group.class(a).size) as i64
                } else {
                    0
                };
                acc == Cyclotomic::from_integer(expected, 1)
            })
        })
    }
}

pub fn character_table(group: &Arc<PermGroup>) -> Result<CharacterTable> {
    character_table_with(group, &TableOptions::default())
}

pub fn character_table_with(group: &Arc<PermGroup>, opts: &TableOptions) -> Result<CharacterTable> {
    if group.characteristic() != 0 {
        return Err(Error::TableUnavailable(
            "character tables are computed in characteristic 0 only".into(),
        ));
    }
    let n = group.order();
    if n > opts.max_order {
        return Err(Error::TableUnavailable(format!(
            "group order {n} exceeds the table cap {}",
            opts.max_order
        )));
    }
    let e = group.exponent() as u64;
    let ell = find_prime(e, n as u64, opts.prime_search_limit)?;
    let f = Field::new(ell);
    let z = f.pow(f.primitive_root(), (ell - 1) / e);

    let k = group.class_count();
    let sizes: Vec<u64> = (0..k).map(|c| group.class(c).size as u64).collect();
    let coeffs = class_coefficients(group);

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![f.rref(identity_rows(k)).0];
    for j in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(f.split(&space, &coeffs[j])?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::Internal("class matrices did not separate the characters".into()));
    }

    let inverse_class: Vec<usize> = (0..k)
        .map(|c| {
            group
                .class_position(group.inverse(group.class(c).representative))
                .expect("char 0")
        })
        .collect();
    let mut rows = Vec::with_capacity(k);
    for space in spaces {
        let w = &space[0];
        if w[0] == 0 {
            return Err(Error::Internal("central character vanishes at the identity".into()));
        }
        let inv0 = f.inv(w[0]);
        let omega: Vec<u64> = w.iter().map(|&x| f.mul(x, inv0)).collect();
        let norm = (0..k).fold(0, |acc, c| {
            f.add(
                acc,
                f.mul(f.mul(omega[c], omega[inverse_class[c]]), f.inv(sizes[c] % ell)),
            )
        });
        let deg_sq = f.mul(n as u64 % ell, f.inv(norm));
        let degree = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| (d * d) % ell == deg_sq)
            .ok_or_else(|| Error::Internal("no integral degree".into()))?;
        let modular: Vec<u64> = (0..k)
            .map(|c| f.mul(f.mul(omega[c], degree % ell), f.inv(sizes[c] % ell)))
            .collect();
        let values = (0..k)
            .map(|c| lift_value(group, &f, z, e, degree, &modular, c))
            .collect::<Result<Vec<_>>>()?;
        rows.push(ClassFunction::new(group.clone(), values)?);
    }
    rows.sort_by(|a, b| {
        let da = a.dimension().to_rational().expect("integer degree");
        let db = b.dimension().to_rational().expect("integer degree");
        da.cmp(&db).then_with(|| {
            b.values()
                .iter()
                .zip(a.values())
                .map(|(x, y)| x.cmp_coeffs(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    Ok(CharacterTable {
        group: group.clone(),
        rows,
        prime: ell,
    })
}

fn identity_rows(k: usize) -> Vec<Vec<u64>> {
    (0..k)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1;
            v
        })
        .collect()
}

/// `a[j][r][s] = #{x ∈ C_j : x⁻¹·z_s ∈ C_r}` for fixed `z_s ∈ C_s`.
fn class_coefficients(group: &PermGroup) -> Vec<Vec<Vec<u64>>> {
    let k = group.class_count();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for s in 0..k {
        let z = group.class(s).representative;
        for x in 0..group.order() {
            let y = group.mul(group.inverse(x), z);
            let cx = group.class_position(x).expect("char 0");
            let cy = group.class_position(y).expect("char 0");
            a[cx][cy][s] += 1;
        }
    }
    a
}

fn lift_value(
    group: &PermGroup,
    f: &Field,
    z: u64,
    e: u64,
    degree: u64,
    modular: &[u64],
    c: usize,
) -> Result<Cyclotomic> {
    let g = group.class(c).representative;
    let power_values: Vec<u64> = (0..e)
        .map(|t| modular[group.class_position(group.pow(g, t as i64)).expect("char 0")])
        .collect();
    let e_inv = f.inv(e % f.p);
    let z_inv = f.inv(z);
    let mut value = Cyclotomic::zero(e as u32);
    for kk in 0..e {
        let step = f.pow(z_inv, kk);
        let mut acc = 0;
        let mut w = 1;
        for &pv in &power_values {
            acc = f.add(acc, f.mul(pv, w));
            w = f.mul(w, step);
        }
        let m = f.mul(acc, e_inv);
        if m > degree {
            return Err(Error::Internal(format!(
                "eigenvalue multiplicity {m} exceeds degree {degree}"
            )));
        }
        if m > 0 {
            value =
                &value + &Cyclotomic::zeta_pow(e as u32, kk as i64).scale(&Rational::from_integer((m as i64).into()));
        }
    }
    Ok(value)
}

fn find_prime(e: u64, order: u64, limit: u64) -> Result<u64> {
    (1..=limit)
        .map(|t| t * e + 1)
        .find(|&ell| ell * ell > 4 * order && is_prime(ell))
        .ok_or_else(|| Error::TableUnavailable(format!("no prime ℓ ≡ 1 mod {e} below {}", limit * e + 1)))
}

/// Arithmetic in `F_p` for `p < 2³²`.
struct Field {
    p: u64,
}

impl Field {
    fn new(p: u64) -> Self {
        Field { p }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    fn primitive_root(&self) -> u64 {
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .unwrap_or(1)
    }

    /// Row-reduced echelon form of the given rows, dropping zero rows.
    /// Returns the rows and their pivot columns.
    fn rref(&self, mut rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
        let cols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, i);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let factor = rows[i][c];
                    for cc in 0..cols {
                        let t = self.mul(factor, rows[r][cc]);
                        rows[i][cc] = self.sub(rows[i][cc], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }

    fn nullspace(&self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let cols = m.first().map_or(0, Vec::len);
        let (rows, pivots) = self.rref(m.to_vec());
        let mut out = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = self.sub(0, row[free]);
            }
            out.push(v);
        }
        out
    }

    /// Characteristic polynomial (lowest degree first) via reduction to
    /// Hessenberg form.
    fn charpoly(&self, mut h: Vec<Vec<u64>>) -> Vec<u64> {
        let n = h.len();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(u, h[m][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for j in 0..n {
                    let t = self.mul(u, h[j][i]);
                    h[j][m] = self.add(h[j][m], t);
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut p = vec![0; m + 1];
            for (d, &c) in prev.iter().enumerate() {
                p[d + 1] = self.add(p[d + 1], c);
                p[d] = self.sub(p[d], self.mul(h[m - 1][m - 1], c));
            }
            let mut t = 1;
            for i in 1..m {
                t = self.mul(t, h[m - i][m - i - 1]);
                let coef = self.mul(t, h[m - i - 1][m - 1]);
                for (d, &c) in polys[m - i - 1].iter().enumerate() {
                    p[d] = self.sub(p[d], self.mul(coef, c));
                }
            }
            polys.push(p);
        }
        polys.pop().expect("n + 1 polynomials")
    }

    fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Splits an invariant subspace (rows in RREF) into eigenspaces of the
    /// class matrix `a[r][s]` acting on column vectors.
    fn split(&self, basis: &[Vec<u64>], a: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>> {
        let (_, pivots) = self.rref(basis.to_vec());
        let d = basis.len();
        let k = a.len();
        // Restriction: (M b_t)[pivot_s] is the s-th coordinate of M b_t.
        let mut restricted = vec![vec![0u64; d]; d];
        for (t, b) in basis.iter().enumerate() {
            for (s, &row) in pivots.iter().enumerate() {
                let v = (0..k).fold(0, |acc, c| self.add(acc, self.mul(a[row][c], b[c])));
                restricted[s][t] = v;
            }
        }
        let poly = self.charpoly(restricted.clone());
        let mut out = Vec::new();
        let mut total = 0;
        for lambda in 0..self.p {
            if self.eval(&poly, lambda) != 0 {
                continue;
            }
            let mut shifted = restricted.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = self.sub(row[i], lambda);
            }
            let coords = self.nullspace(&shifted);
            if coords.is_empty() {
                continue;
            }
            total += coords.len();
            let vectors = coords
                .iter()
                .map(|c| {
                    (0..k)
                        .map(|col| (0..d).fold(0, |acc, t| self.add(acc, self.mul(c[t], basis[t][col]))))
                        .collect()
                })
                .collect();
            out.push(self.rref(vectors).0);
            if total == d {
                break;
            }
        }
        if total != d {
            return Err(Error::Internal("class matrix is not diagonalisable over F_ℓ".into()));
        }
        Ok(out)
    }
}
