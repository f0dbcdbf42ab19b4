//! Class functions with cyclotomic values on the (p-regular) conjugacy classes
//! of a permutation group: restriction, induction, inner products, isotypic
//! dimensions and the geometric projection.

mod table;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

pub use crate::groups::SubgroupEmbedding;
pub use table::{character_table, character_table_with, CharacterTable, Decomposition, TableOptions};

use crate::cyclo::check_conductor;
use crate::cyclo::rational::Rational;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::{CyclicSubgroupClass, PermGroup};

/// A virtual character (with ℚ(ζ)-coefficients) of a finite group: one value
/// per class in [`PermGroup::regular_class_indices`] order.
///
/// Values share one conductor, a multiple of the group exponent.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<PermGroup>,
    values: Vec<Cyclotomic>,
}

pub(crate) fn same_group(a: &Arc<PermGroup>, b: &Arc<PermGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl ClassFunction {
    pub fn new(group: Arc<PermGroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::ValueCount {
                expected: group.class_count(),
                got: values.len(),
            });
        }
        let conductor = values
            .iter()
            .fold(group.exponent() as u64, |acc, v| acc.lcm(&(v.conductor() as u64)));
        let conductor = check_conductor(conductor)?;
        let values = values
            .into_iter()
            .map(|v| v.lift(conductor))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { group, values })
    }

    /// Evaluates `f` at each class representative.
    pub fn from_fn(group: Arc<PermGroup>, f: impl Fn(usize) -> Cyclotomic) -> Result<Self> {
        let values = (0..group.class_count())
            .map(|pos| f(group.class(pos).representative))
            .collect();
        Self::new(group, values)
    }

    pub fn from_rationals(group: Arc<PermGroup>, values: Vec<Rational>) -> Result<Self> {
        let values = values.into_iter().map(|q| Cyclotomic::from_rational(q, 1)).collect();
        Self::new(group, values)
    }

    pub fn zero(group: Arc<PermGroup>) -> Self {
        Self::constant(group, Rational::zero())
    }

    pub fn trivial(group: Arc<PermGroup>) -> Self {
        Self::constant(group, Rational::from_integer(1.into()))
    }

    fn constant(group: Arc<PermGroup>, q: Rational) -> Self {
        let n = group.exponent() as u32;
        let values = vec![Cyclotomic::from_rational(q, n); group.class_count()];
        ClassFunction { group, values }
    }

    /// Value `c` at the identity class and zero elsewhere.
    pub fn point_mass(group: Arc<PermGroup>, c: Cyclotomic) -> Self {
        let mut f = Self::zero(group);
        f.values[0] = &f.values[0] + &c;
        f
    }

    /// The regular character `kG`: `|G|` at the identity, zero elsewhere.
    pub fn regular(group: Arc<PermGroup>) -> Self {
        let n = group.order() as i64;
        Self::point_mass(group, Cyclotomic::from_integer(n, 1))
    }

    /// `kG/|G|`, the image of the unit of the geometric part.
    pub fn normalized_regular(group: Arc<PermGroup>) -> Self {
        Self::point_mass(group, Cyclotomic::one(1))
    }

    /// The character `χʲ` of a cyclic group with `χ(s) = ζ_r` for the given
    /// generator `s`.
    pub fn cyclic_character(group: Arc<PermGroup>, generator: usize, j: i64) -> Result<Self> {
        let r = group.element_order(generator);
        if r != group.order() {
            return Err(Error::InvalidEmbedding("element does not generate the group".into()));
        }
        let powers = group.cyclic_elements(generator);
        let mut exponent_of = vec![0usize; group.order()];
        for (k, &x) in powers.iter().enumerate() {
            exponent_of[x] = k;
        }
        Self::from_fn(group, |x| Cyclotomic::zeta_pow(r as u32, j * exponent_of[x] as i64))
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn characteristic(&self) -> u32 {
        self.group.characteristic()
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn conductor(&self) -> u32 {
        self.values.first().map_or(1, Cyclotomic::conductor)
    }

    /// Value at element `i`; `None` when `i` is `p`-singular.
    pub fn value_at(&self, i: usize) -> Option<&Cyclotomic> {
        self.group.class_position(i).map(|pos| &self.values[pos])
    }

    /// Value at the identity.
    pub fn dimension(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    /// Rational values, when every value is rational.
    pub fn rational_values(&self) -> Option<Vec<Rational>> {
        self.values.iter().map(Cyclotomic::to_rational).collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (tensor product of representations).
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(q)).collect(),
        }
    }

    pub fn scale_by(&self, c: &Cyclotomic) -> Self {
        let values = self.values.iter().map(|v| v * c).collect();
        ClassFunction::new(self.group.clone(), values).expect("scalar within conductor cap")
    }

    /// Pointwise power; for a linear character this is `χᵈ`.
    pub fn pow(&self, d: u32) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.pow(d)).collect(),
        }
    }

    /// Complex conjugate (the dual character).
    pub fn conj(&self) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// Whether `f(gᵏ) = galois(f(g), k)` for every class representative `g`
    /// and every `k` prime to the order of `g`, as holds for any virtual
    /// character.
    pub fn is_galois_stable(&self) -> bool {
        let g = &self.group;
        let n = self.conductor() as i64;
        (0..g.class_count()).all(|pos| {
            let rep = g.class(pos).representative;
            let o = g.element_order(rep) as i64;
            (1..=o).filter(|k| k.gcd(&o) == 1).all(|k| {
                // A unit mod n that reduces to k mod o.
                let lifted = (0..n)
                    .map(|t| k + t * o)
                    .find(|u| u.gcd(&n) == 1)
                    .expect("CRT lift exists");
                let image = self.values[pos].galois(lifted).expect("unit");
                self.value_at(g.pow(rep, k)) == Some(&image)
            })
        })
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

macro_rules! pointwise_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        /// Panics if the operands live on different groups.
        impl $tr for &ClassFunction {
            type Output = ClassFunction;
            fn $m(self, rhs: &ClassFunction) -> ClassFunction {
                self.$checked(rhs).expect("class functions on the same group")
            }
        }
        impl $tr for ClassFunction {
            type Output = ClassFunction;
            fn $m(self, rhs: ClassFunction) -> ClassFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
pointwise_op!(Add, add, checked_add);
pointwise_op!(Sub, sub, checked_sub);
pointwise_op!(Mul, mul, checked_mul);

impl Neg for &ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl Neg for ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        -&self
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `Res_H^G f`: the value at `h` is `f` at the image of `h`.
pub fn restrict(f: &ClassFunction, emb: &SubgroupEmbedding) -> Result<ClassFunction> {
    if !same_group(f.group(), &emb.ambient) {
        return Err(Error::InvalidEmbedding(
            "class function is not on the ambient group".into(),
        ));
    }
    let values = (0..emb.sub.class_count())
        .map(|pos| {
            let h = emb.sub.class(pos).representative;
            f.value_at(emb.map[h])
                .cloned()
                .ok_or_else(|| Error::Internal("p-regular element mapped to a p-singular one".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(emb.sub.clone(), values)
}

/// `Ind_H^G f` by the Frobenius formula, grouped by classes:
/// `(Ind f)(g) = |C_G(g)|/|H| · Σ_{h ∈ H ∩ g^G} f(h)`.
pub fn induce(f: &ClassFunction, emb: &SubgroupEmbedding) -> Result<ClassFunction> {
    if !same_group(f.group(), &emb.sub) {
        return Err(Error::InvalidEmbedding("class function is not on the subgroup".into()));
    }
    let g = &emb.ambient;
    let n = f.conductor();
    let mut acc = vec![Cyclotomic::zero(n); g.class_count()];
    for (h, &image) in emb.map.iter().enumerate() {
        if let (Some(v), Some(pos)) = (f.value_at(h), g.class_position(image)) {
            acc[pos] = &acc[pos] + v;
        }
    }
    let h_order = emb.sub.order() as i64;
    let values = acc
        .into_iter()
        .enumerate()
        .map(|(pos, v)| {
            let centralizer = (g.order() / g.class(pos).size) as i64;
            v.scale(&Rational::new(centralizer.into(), h_order.into()))
        })
        .collect();
    ClassFunction::new(g.clone(), values)
}

/// `⟨f, h⟩ = (1/|G|) Σ_g f(g)·conj(h(g))`, summed class-wise.
pub fn inner_product(f: &ClassFunction, h: &ClassFunction) -> Result<Cyclotomic> {
    f.check_same(h)?;
    let g = f.group();
    let mut acc = Cyclotomic::zero(f.conductor());
    for (pos, (a, b)) in f.values.iter().zip(&h.values).enumerate() {
        let size = g.class(pos).size as i64;
        acc = &acc + &(a * &b.conj()).scale(&Rational::from_integer(size.into()));
    }
    Ok(acc.scale(&Rational::new(1.into(), (g.order() as i64).into())))
}

/// Dimension of the `χⁱ`-isotypic part of `Res_⟨s⟩ f`, where `χ(s) = ζ_r`:
/// `(1/r) Σ_k f(sᵏ)·ζ_r^{−ik}`. Errors if the result is not rational.
pub fn isotypic_dim_at(f: &ClassFunction, s: usize, i: i64) -> Result<Rational> {
    let g = f.group();
    let r = g.element_order(s);
    let p = g.characteristic() as usize;
    if p != 0 && r.is_multiple_of(p) {
        return Err(Error::NotPrimeToCharacteristic { order: r, p: p as u32 });
    }
    let mut acc = Cyclotomic::zero(f.conductor());
    let mut x = 0;
    for k in 0..r as i64 {
        let v = f.value_at(x).expect("p-regular power");
        acc = &acc + &(v * &Cyclotomic::zeta_pow(r as u32, -i * k));
        x = g.mul(x, s);
    }
    let acc = acc.scale(&Rational::new(1.into(), (r as i64).into()));
    acc.to_rational()
        .ok_or_else(|| Error::NotRational(format!("isotypic dimension {acc} for i = {i}")))
}

/// [`isotypic_dim_at`] for the marked generator of `σ`.
pub fn isotypic_dim(f: &ClassFunction, sigma: &CyclicSubgroupClass, i: i64) -> Result<Rational> {
    isotypic_dim_at(f, sigma.generator, i)
}

/// Projection to the geometric part: `(f(1)/|G|)·kG`, i.e. `f(1)` at the
/// identity and zero elsewhere.
pub fn geometric_project(f: &ClassFunction) -> ClassFunction {
    ClassFunction::point_mass(f.group().clone(), f.dimension().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rational::int;
    use crate::groups::catalog;

    fn ints(g: &Arc<PermGroup>, v: &[i64]) -> ClassFunction {
        ClassFunction::from_rationals(g.clone(), v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    fn s3_sign() -> ClassFunction {
        ints(&catalog::symmetric3(0), &[1, -1, 1])
    }

    #[test]
    fn value_count_is_checked() {
        let g = catalog::symmetric3(0);
        assert_eq!(
            ClassFunction::from_rationals(g, vec![int(1)]).unwrap_err(),
            Error::ValueCount { expected: 3, got: 1 }
        );
    }

    #[test]
    fn restrict_examples() {
        let g = catalog::symmetric3(0);
        let t = g.all_classes()[1].representative;
        let h = g.cyclic_subgroup(t).unwrap();
        assert_eq!(
            restrict(&ClassFunction::trivial(g.clone()), &h).unwrap(),
            ClassFunction::trivial(h.sub.clone())
        );
        assert_eq!(
            restrict(&ClassFunction::regular(g.clone()), &h).unwrap(),
            ints(&h.sub, &[6, 0])
        );
        assert_eq!(restrict(&s3_sign(), &h).unwrap(), ints(&h.sub, &[1, -1]));
    }

    #[test]
    fn induce_examples() {
        let g = catalog::symmetric3(0);
        let f = ints(&g, &[2, 0, -1]);
        assert_eq!(induce(&f, &SubgroupEmbedding::identity(g.clone())).unwrap(), f);
        let one = g.subgroup_generated_by(&[]).unwrap();
        assert_eq!(
            induce(&ClassFunction::trivial(one.sub.clone()), &one).unwrap(),
            ClassFunction::regular(g.clone())
        );
        let t = g.all_classes()[1].representative;
        let h = g.cyclic_subgroup(t).unwrap();
        assert_eq!(
            induce(&ClassFunction::trivial(h.sub.clone()), &h).unwrap(),
            ints(&g, &[3, 1, 0])
        );
    }

    #[test]
    fn induce_rejects_foreign_functions() {
        let g = catalog::symmetric3(0);
        let h = g.cyclic_subgroup(g.all_classes()[1].representative).unwrap();
        assert!(induce(&ClassFunction::trivial(g.clone()), &h).is_err());
        assert!(restrict(&ClassFunction::trivial(h.sub.clone()), &h).is_err());
    }

    #[test]
    fn inner_product_examples() {
        let g = catalog::symmetric3(0);
        let triv = ClassFunction::trivial(g.clone());
        assert!(inner_product(&triv, &triv).unwrap().is_one());
        let chi2 = ints(&g, &[2, 0, -1]);
        assert_eq!(
            inner_product(&ClassFunction::regular(g.clone()), &chi2).unwrap(),
            Cyclotomic::from_integer(2, 1)
        );
        assert!(inner_product(&s3_sign(), &triv).unwrap().is_zero());
        assert_eq!(
            inner_product(&triv, &ClassFunction::trivial(catalog::cyclic(2, 0))),
            Err(Error::GroupMismatch)
        );
    }

    #[test]
    fn isotypic_dim_examples() {
        let z4 = catalog::cyclic(4, 0);
        let s = z4.generator_indices()[0];
        let triv = ClassFunction::trivial(z4.clone());
        assert_eq!(isotypic_dim_at(&triv, s, 0).unwrap(), int(1));
        assert_eq!(isotypic_dim_at(&triv, s, 3).unwrap(), int(0));
        let reg = ClassFunction::regular(z4.clone());
        for i in 0..4 {
            assert_eq!(isotypic_dim_at(&reg, s, i).unwrap(), int(1));
        }
        let z2 = catalog::cyclic(2, 0);
        let sign = ints(&z2, &[1, -1]);
        assert_eq!(isotypic_dim_at(&sign, 1, 1).unwrap(), int(1));
        let odd = ClassFunction::point_mass(z4.clone(), Cyclotomic::zeta_pow(4, 1));
        assert!(matches!(isotypic_dim_at(&odd, s, 0), Err(Error::NotRational(_))));
    }

    #[test]
    fn isotypic_dim_rejects_wild_generators() {
        let z6 = catalog::cyclic(6, 2);
        let s = z6.generator_indices()[0];
        assert!(matches!(
            isotypic_dim_at(&ClassFunction::trivial(z6), s, 0),
            Err(Error::NotPrimeToCharacteristic { order: 6, p: 2 })
        ));
    }

    #[test]
    fn geometric_project_examples() {
        let z2 = catalog::cyclic(2, 0);
        assert_eq!(
            geometric_project(&ClassFunction::trivial(z2.clone())),
            ClassFunction::normalized_regular(z2.clone())
        );
        assert!(geometric_project(&ints(&z2, &[0, 5])).is_zero());
        assert_eq!(geometric_project(&ints(&z2, &[1, -1])), ints(&z2, &[1, 0]));
    }

    #[test]
    fn cyclic_character_values() {
        let z4 = catalog::cyclic(4, 0);
        let s = z4.generator_indices()[0];
        let chi = ClassFunction::cyclic_character(z4.clone(), s, 1).unwrap();
        // classes are ordered 1, s², s, s³
        let expect = [
            Cyclotomic::one(4),
            Cyclotomic::from_integer(-1, 4),
            Cyclotomic::zeta_pow(4, 1),
            Cyclotomic::zeta_pow(4, 3),
        ];
        assert_eq!(chi.values(), &expect);
        assert!(ClassFunction::cyclic_character(z4.clone(), z4.pow(s, 2), 1).is_err());
    }
}
