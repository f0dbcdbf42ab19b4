//! Finite permutation groups, fully enumerated: conjugacy classes,
//! centralizers, and conjugacy classes of cyclic subgroups of order prime to
//! the characteristic ("dual cyclic" subgroups).

pub mod catalog;
mod perm;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_integer::Integer;

pub use perm::Perm;

use crate::cyclo::rational::is_prime;
use crate::error::{Error, Result};
use crate::limits::max_group_order;

const CAYLEY_TABLE_LIMIT: usize = 256;

/// A conjugacy class of a [`PermGroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Smallest element index in the class.
    pub representative: usize,
    pub representative_perm: Perm,
    pub size: usize,
    /// Order of every element in the class.
    pub order: usize,
    pub elements: Vec<usize>,
}

/// A conjugacy class of cyclic subgroups `⟨g⟩` with `gcd(|⟨g⟩|, p) = 1`,
/// with a marked generator fixing the identification `⟨g⟩ ≅ μ_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSubgroupClass {
    pub id: usize,
    /// Element index of the marked generator.
    pub generator: usize,
    pub generator_perm: Perm,
    pub order: usize,
    pub centralizer_order: usize,
    pub normalizer_order: usize,
    /// Indices (into [`PermGroup::all_classes`]) of the conjugacy classes
    /// whose elements generate a conjugate of this subgroup. Each one is a
    /// conjugacy class of monomorphisms `μ_r → G` with image in the class.
    pub classes: Vec<usize>,
}

impl CyclicSubgroupClass {
    /// Number of conjugacy classes of monomorphisms `μ_r → G` whose image
    /// is conjugate to this subgroup; equals `φ(r)/[N(σ) : C(σ)]`.
    pub fn monomorphism_classes(&self) -> usize {
        self.classes.len()
    }
}

/// A finite group of permutations with every element enumerated.
///
/// Elements are listed breadth-first from the identity, right-multiplying by
/// the generators in the order given. Class functions built on the group live
/// on its `p`-regular classes when the characteristic `p` is positive.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    generator_indices: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    class_of: Vec<usize>,
    all_classes: Vec<ConjClass>,
    regular: Vec<usize>,
    position: Vec<Option<usize>>,
    exponent: usize,
    characteristic: u32,
    cayley: Option<Vec<u32>>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.characteristic == other.characteristic && self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

fn check_characteristic(p: u32) -> Result<()> {
    if p == 0 || is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::InvalidCharacteristic(p))
    }
}

impl PermGroup {
    /// Closes `generators` under composition.
    pub fn enumerate(degree: usize, generators: Vec<Perm>, characteristic: u32) -> Result<Arc<Self>> {
        Self::enumerate_with_cap(degree, generators, characteristic, max_group_order())
    }

    pub fn enumerate_with_cap(
        degree: usize,
        generators: Vec<Perm>,
        characteristic: u32,
        cap: usize,
    ) -> Result<Arc<Self>> {
        check_characteristic(characteristic)?;
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in &generators {
                let y = elements[x].compose(s);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let generator_indices = generators.iter().map(|g| index[g]).collect();
        let n = elements.len();
        let inverses = elements.iter().map(|g| index[&g.inverse()]).collect();
        let orders: Vec<usize> = elements.iter().map(Perm::order).collect();
        let exponent = orders.iter().fold(1, |a, &b| a.lcm(&b));
        let cayley = (n <= CAYLEY_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose(b)] as u32);
                }
            }
            t
        });
        let mut group = PermGroup {
            degree,
            generators,
            generator_indices,
            elements,
            index,
            inverses,
            orders,
            class_of: Vec::new(),
            all_classes: Vec::new(),
            regular: Vec::new(),
            position: Vec::new(),
            exponent,
            characteristic,
            cayley,
        };
        group.compute_classes();
        group.select_regular();
        Ok(Arc::new(group))
    }

    /// The same group viewed in another characteristic.
    pub fn with_characteristic(&self, p: u32) -> Result<Arc<Self>> {
        check_characteristic(p)?;
        let mut g = PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            generator_indices: self.generator_indices.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            inverses: self.inverses.clone(),
            orders: self.orders.clone(),
            class_of: self.class_of.clone(),
            all_classes: self.all_classes.clone(),
            regular: Vec::new(),
            position: Vec::new(),
            exponent: self.exponent,
            characteristic: p,
            cayley: self.cayley.clone(),
        };
        g.select_regular();
        Ok(Arc::new(g))
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = raw.len();
            let mut orbit = vec![start];
            class_of[start] = id;
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for &s in &self.generator_indices {
                    let y = self.mul(self.mul(s, x), self.inverses[s]);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        raw.sort_by_key(|c| (self.orders[c[0]], c.len(), c[0]));
        for (id, c) in raw.iter().enumerate() {
            for &x in c {
                class_of[x] = id;
            }
        }
        self.all_classes = raw
            .into_iter()
            .map(|elements| ConjClass {
                representative: elements[0],
                representative_perm: self.elements[elements[0]].clone(),
                size: elements.len(),
                order: self.orders[elements[0]],
                elements,
            })
            .collect();
        self.class_of = class_of;
    }

    fn select_regular(&mut self) {
        let p = self.characteristic as usize;
        self.regular = (0..self.all_classes.len())
            .filter(|&c| p == 0 || !self.all_classes[c].order.is_multiple_of(p))
            .collect();
        self.position = vec![None; self.all_classes.len()];
        for (pos, &c) in self.regular.iter().enumerate() {
            self.position[c] = Some(pos);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.cayley {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.orders[a] as i64;
        let mut e = k.rem_euclid(ord);
        let mut acc = 0;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn conjugate(&self, g: usize, t: usize) -> usize {
        // t⁻¹ g t
        self.mul(self.mul(self.inverses[t], g), t)
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_p_regular(&self, i: usize) -> bool {
        let p = self.characteristic as usize;
        p == 0 || !self.orders[i].is_multiple_of(p)
    }

    /// Every conjugacy class, in deterministic order: by element order, then
    /// class size, then smallest element index.
    pub fn all_classes(&self) -> &[ConjClass] {
        &self.all_classes
    }

    /// Index into [`Self::all_classes`] of the class containing element `i`.
    pub fn class_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Indices into [`Self::all_classes`] of the classes class functions live
    /// on: all classes when `p = 0`, the `p`-regular ones otherwise.
    pub fn regular_class_indices(&self) -> &[usize] {
        &self.regular
    }

    /// Number of classes class functions are defined on.
    pub fn class_count(&self) -> usize {
        self.regular.len()
    }

    /// The class at position `pos` among the class-function classes.
    pub fn class(&self, pos: usize) -> &ConjClass {
        &self.all_classes[self.regular[pos]]
    }

    /// Position among the class-function classes of the class of element
    /// `i`; `None` for `p`-singular elements.
    pub fn class_position(&self, i: usize) -> Option<usize> {
        self.position[self.class_of[i]]
    }

    /// Conjugacy classes, optionally restricted to `p`-regular ones.
    pub fn conjugacy_classes(&self, p_regular_only: bool) -> Vec<&ConjClass> {
        if p_regular_only {
            self.regular.iter().map(|&c| &self.all_classes[c]).collect()
        } else {
            self.all_classes.iter().collect()
        }
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_indices;
        g.iter().all(|&a| g.iter().all(|&b| self.commute(a, b)))
    }

    /// Conjugacy classes of cyclic subgroups of order prime to the
    /// characteristic, including the trivial subgroup. Ordered by subgroup
    /// order, then by the position of the generator's conjugacy class.
    pub fn cyclic_subgroup_classes(&self) -> Vec<CyclicSubgroupClass> {
        let n = self.order();
        let mut bucket_of = vec![usize::MAX; self.all_classes.len()];
        let mut buckets: Vec<Vec<usize>> = Vec::new();
        for &c in &self.regular {
            if bucket_of[c] != usize::MAX {
                continue;
            }
            let rep = self.all_classes[c].representative;
            let r = self.orders[rep];
            let mut members: Vec<usize> = (1..=r.max(1))
                .filter(|&k| k.gcd(&r) == 1)
                .map(|k| self.class_of[self.pow(rep, k as i64)])
                .collect();
            members.sort_unstable();
            members.dedup();
            let id = buckets.len();
            for &m in &members {
                bucket_of[m] = id;
            }
            buckets.push(members);
        }
        buckets.sort_by_key(|b| (self.all_classes[b[0]].order, b[0]));
        buckets
            .into_iter()
            .enumerate()
            .map(|(id, classes)| {
                let cls = &self.all_classes[classes[0]];
                let r = cls.order;
                let gens: usize = classes.iter().map(|&c| self.all_classes[c].size).sum();
                let phi = (1..=r).filter(|&k| k.gcd(&r) == 1).count();
                CyclicSubgroupClass {
                    id,
                    generator: cls.representative,
                    generator_perm: cls.representative_perm.clone(),
                    order: r,
                    centralizer_order: n / cls.size,
                    normalizer_order: n * phi / gens,
                    classes,
                }
            })
            .collect()
    }

    /// The element indices of `⟨g⟩`, listed as `g⁰, g¹, …`.
    pub fn cyclic_elements(&self, g: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = g;
        while x != 0 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    pub fn centralizer_elements(&self, g: usize) -> Vec<usize> {
        (0..self.order()).filter(|&h| self.commute(g, h)).collect()
    }

    /// The subgroup generated by the given elements.
    pub fn subgroup_generated_by(self: &Arc<Self>, gens: &[usize]) -> Result<SubgroupEmbedding> {
        let perms = gens
            .iter()
            .filter(|&&g| g != 0)
            .map(|&g| self.elements[g].clone())
            .collect();
        let sub = PermGroup::enumerate(self.degree, perms, self.characteristic)?;
        SubgroupEmbedding::by_perms(sub, self.clone())
    }

    /// The subgroup with exactly the given element set, which must be closed
    /// under multiplication. A small generating set is chosen greedily.
    pub fn subgroup_from_elements(self: &Arc<Self>, set: &[usize]) -> Result<SubgroupEmbedding> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut gens: Vec<usize> = Vec::new();
        let mut span: Vec<usize> = vec![0];
        for &x in &sorted {
            if span.binary_search(&x).is_ok() {
                continue;
            }
            gens.push(x);
            span = self.closure(&gens);
            if span.len() > sorted.len() {
                return Err(Error::InvalidEmbedding("element set is not closed".into()));
            }
        }
        if span != sorted {
            return Err(Error::InvalidEmbedding("element set is not a subgroup".into()));
        }
        self.subgroup_generated_by(&gens)
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// `C_G(σ)` for the marked generator of `σ`.
    pub fn centralizer(self: &Arc<Self>, sigma: &CyclicSubgroupClass) -> Result<SubgroupEmbedding> {
        self.subgroup_from_elements(&self.centralizer_elements(sigma.generator))
    }

    /// `⟨g⟩` as a subgroup whose element `k` is `gᵏ`.
    pub fn cyclic_subgroup(self: &Arc<Self>, g: usize) -> Result<SubgroupEmbedding> {
        self.subgroup_generated_by(&[g])
    }
}

/// An injective homomorphism from `sub` into `ambient`, given on elements.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    pub sub: Arc<PermGroup>,
    pub ambient: Arc<PermGroup>,
    /// `map[i]` is the ambient index of sub-element `i`.
    pub map: Vec<usize>,
}

impl SubgroupEmbedding {
    /// Validates that `map` is an injective homomorphism and that both
    /// groups share a characteristic.
    pub fn new(sub: Arc<PermGroup>, ambient: Arc<PermGroup>, map: Vec<usize>) -> Result<Self> {
        if sub.characteristic() != ambient.characteristic() {
            return Err(Error::InvalidEmbedding("characteristics differ".into()));
        }
        if map.len() != sub.order() || map.iter().any(|&x| x >= ambient.order()) {
            return Err(Error::InvalidEmbedding("map has the wrong shape".into()));
        }
        let mut seen = vec![false; ambient.order()];
        for &x in &map {
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidEmbedding("map is not injective".into()));
            }
        }
        for x in 0..sub.order() {
            for &s in sub.generator_indices() {
                if map[sub.mul(x, s)] != ambient.mul(map[x], map[s]) {
                    return Err(Error::InvalidEmbedding("map is not a homomorphism".into()));
                }
            }
        }
        Ok(SubgroupEmbedding { sub, ambient, map })
    }

    /// Embedding of a permutation subgroup of the same degree.
    pub fn by_perms(sub: Arc<PermGroup>, ambient: Arc<PermGroup>) -> Result<Self> {
        if sub.degree() != ambient.degree() {
            return Err(Error::InvalidEmbedding("degrees differ".into()));
        }
        let map = sub
            .elements()
            .iter()
            .map(|g| {
                ambient
                    .index_of(g)
                    .ok_or_else(|| Error::InvalidEmbedding(format!("{g} is not in the ambient group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sub, ambient, map)
    }

    /// The identity embedding of a group into itself.
    pub fn identity(group: Arc<PermGroup>) -> Self {
        let map = (0..group.order()).collect();
        SubgroupEmbedding {
            sub: group.clone(),
            ambient: group,
            map,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::catalog;
    use super::*;

    fn class_sizes(g: &PermGroup) -> Vec<usize> {
        g.all_classes().iter().map(|c| c.size).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(PermGroup::enumerate(1, vec![], 0).unwrap().order(), 1);
        assert_eq!(catalog::symmetric3(0).order(), 6);
        assert_eq!(catalog::cyclic(4, 0).order(), 4);
    }

    #[test]
    fn enumeration_cap() {
        let s4 = vec![
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ];
        assert_eq!(
            PermGroup::enumerate_with_cap(4, s4, 0, 10).unwrap_err(),
            Error::GroupTooLarge { cap: 10 }
        );
    }

    #[test]
    fn rejects_bad_characteristic_and_degree() {
        assert_eq!(
            PermGroup::enumerate(2, vec![], 4).unwrap_err(),
            Error::InvalidCharacteristic(4)
        );
        let p = Perm::identity(3);
        assert!(PermGroup::enumerate(2, vec![p], 0).is_err());
    }

    #[test]
    fn class_examples() {
        assert_eq!(class_sizes(&PermGroup::enumerate(1, vec![], 0).unwrap()), vec![1]);
        let s3 = catalog::symmetric3(0);
        assert_eq!(class_sizes(&s3), vec![1, 3, 2]);
        let s3p3 = catalog::symmetric3(3);
        let reg: Vec<usize> = s3p3.conjugacy_classes(true).iter().map(|c| c.size).collect();
        assert_eq!(reg, vec![1, 3]);
        assert_eq!(s3p3.conjugacy_classes(false).len(), 3);
    }

    #[test]
    fn cyclic_subgroup_examples() {
        let triv = PermGroup::enumerate(1, vec![], 0).unwrap();
        assert_eq!(triv.cyclic_subgroup_classes().len(), 1);
        let s3 = catalog::symmetric3(0);
        let cs = s3.cyclic_subgroup_classes();
        assert_eq!(cs.iter().map(|c| c.order).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(cs[2].centralizer_order, 3);
        assert_eq!(cs[2].normalizer_order, 6);
        let s3p3 = catalog::symmetric3(3);
        let cs = s3p3.cyclic_subgroup_classes();
        assert_eq!(cs.iter().map(|c| c.order).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn monomorphism_counts() {
        // ℤ/3: the two generators are not conjugate.
        let z3 = catalog::cyclic(3, 0);
        let cs = z3.cyclic_subgroup_classes();
        assert_eq!(cs[1].monomorphism_classes(), 2);
        assert_eq!(cs[1].normalizer_order, 3);
        // A₄ has two classes of 3-cycles generating the same subgroup class.
        let a4 = catalog::alternating4(0);
        let three = a4.cyclic_subgroup_classes().into_iter().find(|c| c.order == 3).unwrap();
        assert_eq!(three.monomorphism_classes(), 2);
    }

    #[test]
    fn centralizer_examples() {
        let s3 = catalog::symmetric3(0);
        let cs = s3.cyclic_subgroup_classes();
        assert_eq!(s3.centralizer(&cs[0]).unwrap().sub.order(), 6);
        assert_eq!(s3.centralizer(&cs[2]).unwrap().sub.order(), 3);
        let z4 = catalog::cyclic(4, 0);
        for c in z4.cyclic_subgroup_classes() {
            assert_eq!(z4.centralizer(&c).unwrap().sub.order(), 4);
        }
    }

    #[test]
    fn class_equation_and_centralizers_hold_for_catalog() {
        for g in catalog::acceptance_groups() {
            let sizes = class_sizes(&g);
            assert_eq!(sizes.iter().sum::<usize>(), g.order());
            assert!(sizes.iter().all(|s| g.order() % s == 0));
            assert_eq!(g.all_classes()[0].elements, vec![0]);
            for sigma in g.cyclic_subgroup_classes() {
                let c = g.centralizer(&sigma).unwrap();
                assert_eq!(c.sub.order(), sigma.centralizer_order);
                assert_eq!(sigma.centralizer_order % sigma.order, 0);
                assert!(g.cyclic_elements(sigma.generator).iter().all(|x| c.map.contains(x)));
            }
        }
    }

    #[test]
    fn every_regular_element_generates_exactly_one_listed_class() {
        for g in catalog::acceptance_groups() {
            let classes = g.cyclic_subgroup_classes();
            for x in 0..g.order() {
                if !g.is_p_regular(x) {
                    continue;
                }
                let hits = classes
                    .iter()
                    .filter(|sigma| {
                        // x generates a conjugate of ⟨s⟩ iff x is conjugate to a generator of ⟨s⟩.
                        let r = sigma.order;
                        g.element_order(x) == r
                            && (0..g.order()).any(|t| {
                                let y = g.conjugate(x, t);
                                (1..=r).any(|k| k.gcd(&r) == 1 && g.pow(sigma.generator, k as i64) == y)
                            })
                    })
                    .count();
                assert_eq!(hits, 1, "element {x}");
            }
        }
    }

    #[test]
    fn deterministic_ordering() {
        let a = catalog::dihedral4(0);
        let b = catalog::dihedral4(0);
        assert_eq!(a.all_classes(), b.all_classes());
        assert_eq!(a.cyclic_subgroup_classes(), b.cyclic_subgroup_classes());
    }

    #[test]
    fn cyclic_subgroup_lists_powers() {
        let g = catalog::cyclic(6, 0);
        let s = g.generator_indices()[0];
        let emb = g.cyclic_subgroup(s).unwrap();
        for (k, &x) in emb.map.iter().enumerate() {
            assert_eq!(x, g.pow(s, k as i64));
        }
        assert_eq!(emb.sub.order(), 6);
    }

    #[test]
    fn embedding_validation() {
        let g = catalog::symmetric3(0);
        let sub = catalog::cyclic(2, 0);
        // wrong degree
        assert!(SubgroupEmbedding::by_perms(sub.clone(), g.clone()).is_err());
        // non-homomorphic map: send the involution of ℤ/2 onto a 3-cycle
        let three_cycle = g.all_classes()[2].representative;
        assert!(SubgroupEmbedding::new(sub.clone(), g.clone(), vec![0, three_cycle]).is_err());
        let t = g.all_classes()[1].representative;
        assert!(SubgroupEmbedding::new(sub, g, vec![0, t]).is_ok());
    }

    #[test]
    fn with_characteristic_keeps_elements() {
        let g = catalog::cyclic(6, 0);
        let g2 = g.with_characteristic(2).unwrap();
        assert_eq!(g2.order(), 6);
        assert_eq!(g2.class_count(), 3);
        assert!(g.with_characteristic(6).is_err());
    }
}
