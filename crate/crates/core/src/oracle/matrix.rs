//! Finite groups of 2×2 matrices over cyclotomic fields.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;

use crate::cyclo::rational::Rational;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::{Perm, PermGroup};
use crate::limits::max_group_order;

/// A 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: Cyclotomic,
    pub b: Cyclotomic,
    pub c: Cyclotomic,
    pub d: Cyclotomic,
}

impl Mat2 {
    pub fn new(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::diag(Cyclotomic::one(1), Cyclotomic::one(1))
    }

    pub fn diag(a: Cyclotomic, d: Cyclotomic) -> Self {
        Mat2 {
            a,
            b: Cyclotomic::zero(1),
            c: Cyclotomic::zero(1),
            d,
        }
    }

    pub fn antidiag(b: Cyclotomic, c: Cyclotomic) -> Self {
        Mat2 {
            a: Cyclotomic::zero(1),
            b,
            c,
            d: Cyclotomic::zero(1),
        }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    /// Image of a column vector.
    pub fn apply(&self, v: &[Cyclotomic; 2]) -> [Cyclotomic; 2] {
        [
            &(&self.a * &v[0]) + &(&self.b * &v[1]),
            &(&self.c * &v[0]) + &(&self.d * &v[1]),
        ]
    }

    pub fn det(&self) -> Cyclotomic {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> Cyclotomic {
        &self.a + &self.d
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.a.is_one()
    }

    fn lift(&self, n: u32) -> Result<Mat2> {
        Ok(Mat2 {
            a: self.a.lift(n)?,
            b: self.b.lift(n)?,
            c: self.c.lift(n)?,
            d: self.d.lift(n)?,
        })
    }

    fn conductor(&self) -> u32 {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .fold(1u32, |acc, x| acc.lcm(&x.conductor()))
    }

    /// Coefficient vectors, canonical for matrices at a fixed conductor.
    fn key(&self) -> Vec<Rational> {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .flat_map(|x| x.coeffs().iter().cloned())
            .collect()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// How a matrix group is specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixGroupSpec {
    /// `⟨diag(1, ζ_n)⟩`.
    Cyclic(u32),
    /// `⟨diag(ζ_n, ζ_n⁻¹), antidiag(1, 1)⟩` for odd `n`.
    Dihedral(u32),
    Explicit(Vec<Mat2>),
}

impl MatrixGroupSpec {
    pub fn generators(&self) -> Result<Vec<Mat2>> {
        match self {
            MatrixGroupSpec::Cyclic(n) => {
                check_n(*n)?;
                Ok(vec![Mat2::diag(Cyclotomic::one(*n), Cyclotomic::zeta_pow(*n, 1))])
            }
            MatrixGroupSpec::Dihedral(n) => {
                check_n(*n)?;
                if n % 2 == 0 {
                    return Err(Error::InvalidMatrixGroup(format!(
                        "dihedral({n}) contains −1; only odd n act effectively"
                    )));
                }
                Ok(vec![
                    Mat2::diag(Cyclotomic::zeta_pow(*n, 1), Cyclotomic::zeta_pow(*n, -1)),
                    Mat2::antidiag(Cyclotomic::one(1), Cyclotomic::one(1)),
                ])
            }
            MatrixGroupSpec::Explicit(gens) => Ok(gens.clone()),
        }
    }
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidMatrixGroup("order must be positive".into()));
    }
    Ok(())
}

impl fmt::Display for MatrixGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixGroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            MatrixGroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            MatrixGroupSpec::Explicit(gens) => {
                write!(f, "explicit(")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for MatrixGroupSpec {
    type Err = Error;

    /// Parses `cyclic(n)` or `dihedral(n)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |prefix: &str| -> Option<Result<u32>> {
            let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(
                inner
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad order in {s:?}"))),
            )
        };
        if let Some(n) = parse("cyclic") {
            Ok(MatrixGroupSpec::Cyclic(n?))
        } else if let Some(n) = parse("dihedral") {
            Ok(MatrixGroupSpec::Dihedral(n?))
        } else {
            Err(Error::Parse(format!(
                "unknown matrix group spec {s:?}; expected cyclic(n) or dihedral(n)"
            )))
        }
    }
}

/// An enumerated finite matrix group acting on `P¹` without scalars, with a
/// permutation model given by left multiplication on its own elements.
#[derive(Debug)]
pub struct MatrixGroup {
    spec: MatrixGroupSpec,
    elements: Vec<Mat2>,
    abstract_group: Arc<PermGroup>,
    /// `matrix_of[i]` is the matrix index of abstract element `i`.
    matrix_of: Vec<usize>,
    abstract_of: Vec<usize>,
}

impl MatrixGroup {
    pub fn build(spec: MatrixGroupSpec) -> Result<Self> {
        let gens = spec.generators()?;
        let conductor = gens.iter().fold(1u32, |acc, g| acc.lcm(&g.conductor()));
        let gens = gens.iter().map(|g| g.lift(conductor)).collect::<Result<Vec<_>>>()?;
        let one = Mat2::identity().lift(conductor)?;
        let cap = max_group_order();
        let mut elements = vec![one.clone()];
        let mut index: HashMap<Vec<Rational>, usize> = HashMap::from([(one.key(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = elements[x].mul(g);
                let key = y.key();
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    e.insert(elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        if let Some(m) = elements.iter().skip(1).find(|m| m.is_scalar()) {
            return Err(Error::InvalidMatrixGroup(format!(
                "scalar element {m} does not act effectively on P¹"
            )));
        }
        let n = elements.len();
        let perm_of = |g: &Mat2| -> Result<Perm> {
            let images = elements.iter().map(|x| index[&g.mul(x).key()] as u32).collect();
            Perm::new(images)
        };
        let perms = gens.iter().map(perm_of).collect::<Result<Vec<_>>>()?;
        let abstract_group = PermGroup::enumerate(n, perms, 0)?;
        // Left multiplication by m sends the identity (index 0) to m.
        let matrix_of: Vec<usize> = abstract_group.elements().iter().map(|p| p.apply(0) as usize).collect();
        let mut abstract_of = vec![0; n];
        for (i, &m) in matrix_of.iter().enumerate() {
            abstract_of[m] = i;
        }
        Ok(MatrixGroup {
            spec,
            elements,
            abstract_group,
            matrix_of,
            abstract_of,
        })
    }

    pub fn spec(&self) -> &MatrixGroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn abstract_group(&self) -> &Arc<PermGroup> {
        &self.abstract_group
    }

    /// The matrix of an abstract element.
    pub fn matrix(&self, abstract_index: usize) -> &Mat2 {
        &self.elements[self.matrix_of[abstract_index]]
    }

    /// The abstract element of a matrix index.
    pub fn abstract_index(&self, matrix_index: usize) -> usize {
        self.abstract_of[matrix_index]
    }
}

/// The eigenvalues `(α, β)` of a matrix of finite order dividing `order`,
/// found among pairs of `order`-th roots of unity by trace and determinant.
pub fn eigenvalues(m: &Mat2, order: usize) -> Result<(Cyclotomic, Cyclotomic)> {
    let trace = m.trace();
    let det = m.det();
    let o = order as u32;
    for a in 0..order as i64 {
        let alpha = Cyclotomic::zeta_pow(o, a);
        for b in a..order as i64 {
            let beta = Cyclotomic::zeta_pow(o, b);
            if &alpha + &beta == trace && &alpha * &beta == det {
                return Ok((alpha, beta));
            }
        }
    }
    Err(Error::Internal(format!("no root-of-unity eigenvalues for {m}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "cyclic(6)".parse::<MatrixGroupSpec>().unwrap(),
            MatrixGroupSpec::Cyclic(6)
        );
        assert_eq!(
            " dihedral( 5 )".parse::<MatrixGroupSpec>().unwrap(),
            MatrixGroupSpec::Dihedral(5)
        );
        assert!("cyclic(x)".parse::<MatrixGroupSpec>().is_err());
        assert!("torus(3)".parse::<MatrixGroupSpec>().is_err());
        assert_eq!(MatrixGroupSpec::Dihedral(3).to_string(), "dihedral(3)");
    }

    #[test]
    fn build_examples() {
        let g = MatrixGroup::build(MatrixGroupSpec::Cyclic(1)).unwrap();
        assert_eq!(g.order(), 1);
        let g = MatrixGroup::build(MatrixGroupSpec::Cyclic(6)).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.abstract_group().is_abelian());
        let g = MatrixGroup::build(MatrixGroupSpec::Dihedral(3)).unwrap();
        assert_eq!(g.order(), 6);
        let sizes: Vec<usize> = g.abstract_group().all_classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn correspondence_is_a_homomorphism() {
        let g = MatrixGroup::build(MatrixGroupSpec::Dihedral(5)).unwrap();
        let a = g.abstract_group();
        for x in 0..a.order() {
            for y in 0..a.order() {
                assert_eq!(g.matrix(a.mul(x, y)), &g.matrix(x).mul(g.matrix(y)));
            }
        }
    }

    #[test]
    fn scalars_are_rejected() {
        assert!(matches!(
            MatrixGroup::build(MatrixGroupSpec::Dihedral(4)),
            Err(Error::InvalidMatrixGroup(_))
        ));
        let minus = Mat2::diag(Cyclotomic::from_integer(-1, 1), Cyclotomic::from_integer(-1, 1));
        assert!(matches!(
            MatrixGroup::build(MatrixGroupSpec::Explicit(vec![minus])),
            Err(Error::InvalidMatrixGroup(_))
        ));
    }

    #[test]
    fn infinite_groups_hit_the_cap() {
        let shear = Mat2::new(
            Cyclotomic::one(1),
            Cyclotomic::one(1),
            Cyclotomic::zero(1),
            Cyclotomic::one(1),
        );
        assert!(matches!(
            MatrixGroup::build(MatrixGroupSpec::Explicit(vec![shear])),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn eigenvalue_examples() {
        let m = Mat2::antidiag(Cyclotomic::one(1), Cyclotomic::one(1));
        let (a, b) = eigenvalues(&m, 2).unwrap();
        assert_eq!((a, b), (Cyclotomic::one(1), Cyclotomic::from_integer(-1, 1)));
    }
}
