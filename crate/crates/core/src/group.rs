//! Full enumeration of finite permutation groups and id-level arithmetic.
//!
//! Groups in scope are small (hundreds of elements, a couple of thousand at
//! most), so a breadth-first closure of the generators plus a dense
//! multiplication table beats anything cleverer. Every element gets a stable
//! id, with id 0 reserved for the identity; all downstream sets, caches and
//! graphs are expressed over these ids.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;
use crate::perm::{PermError, Permutation};

pub type ElemId = u32;

/// Groups up to this order get a dense id-level multiplication table.
const DENSE_MUL_LIMIT: usize = 2048;

/// Default safety bound on the order of an enumerated group.
pub const DEFAULT_ENUMERATION_CAP: usize = 20_000;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupError {
    Perm(PermError),
    EmptyGenerators,
    GeneratorDegreeMismatch { expected: usize, found: usize },
    CapExceeded { cap: usize },
    EmptySeeds,
    InvalidId(ElemId),
    NotClosed,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::Perm(e) => write!(f, "{e}"),
            GroupError::EmptyGenerators => write!(f, "generator list is empty"),
            GroupError::GeneratorDegreeMismatch { expected, found } => {
                write!(f, "generator degree {found} does not match {expected}")
            }
            GroupError::CapExceeded { cap } => {
                write!(f, "group order exceeds the enumeration cap {cap}")
            }
            GroupError::EmptySeeds => write!(f, "seed set is empty"),
            GroupError::InvalidId(id) => write!(f, "element id {id} out of range"),
            GroupError::NotClosed => write!(f, "set is not closed under the group operation"),
        }
    }
}

impl core::error::Error for GroupError {}

impl From<PermError> for GroupError {
    fn from(e: PermError) -> Self {
        GroupError::Perm(e)
    }
}

/// A named permutation group given by generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn new(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
    ) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::GeneratorDegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(GroupSpec {
            name: name.into(),
            degree,
            generators,
        })
    }

    /// Spec of `self x other` acting on the disjoint union of the two point
    /// sets: each factor's generators fix the other factor's points.
    pub fn direct_product(&self, other: &GroupSpec) -> GroupSpec {
        let degree = self.degree + other.degree;
        let mut generators = Vec::new();
        for g in &self.generators {
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for p in 0..self.degree {
                images[p] = g.image(p) as u16;
            }
            generators.push(Permutation::from_images(images).expect("shifted bijection"));
        }
        for g in &other.generators {
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for p in 0..other.degree {
                images[self.degree + p] = (self.degree + g.image(p)) as u16;
            }
            generators.push(Permutation::from_images(images).expect("shifted bijection"));
        }
        GroupSpec {
            name: format!("{}x{}", self.name, other.name),
            degree,
            generators,
        }
    }
}

/// Partition of a group into left cosets of a normal subgroup.
#[derive(Clone, Debug)]
pub struct CosetPartition {
    /// Representative (lowest id) of each coset, in coset-index order.
    pub reps: Vec<ElemId>,
    /// Coset index of each element.
    pub coset_of: Vec<u32>,
    /// Element ids of each coset.
    pub members: Vec<Vec<ElemId>>,
}

impl CosetPartition {
    pub fn coset_count(&self) -> usize {
        self.reps.len()
    }
}

/// A fully enumerated finite permutation group.
///
/// Immutable after construction; safe to share across threads for reads.
pub struct GroupTable {
    spec: GroupSpec,
    elements: Vec<Permutation>,
    index: BTreeMap<Permutation, ElemId>,
    inverses: Vec<ElemId>,
    element_orders: Vec<u64>,
    generator_ids: Vec<ElemId>,
    dense_mul: Option<Vec<u16>>,
}

impl GroupTable {
    /// Breadth-first closure of the generators under composition.
    ///
    /// Element 0 is the identity and the discovery order is deterministic
    /// for a fixed spec. Fails if the closure grows past `cap`.
    pub fn enumerate(spec: GroupSpec, cap: usize) -> Result<Self, GroupError> {
        if spec.generators.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        let cap = cap.max(1);
        let mut elements: Vec<Permutation> = Vec::new();
        let mut index: BTreeMap<Permutation, ElemId> = BTreeMap::new();

        let id = Permutation::identity(spec.degree);
        index.insert(id.clone(), 0);
        elements.push(id);

        let mut next = 0usize;
        while next < elements.len() {
            for g in &spec.generators {
                let product = elements[next].compose(g)?;
                if !index.contains_key(&product) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(product.clone(), elements.len() as ElemId);
                    elements.push(product);
                }
            }
            next += 1;
        }

        let n = elements.len();
        let inverses = elements
            .iter()
            .map(|p| index[&p.inverse()])
            .collect::<Vec<_>>();
        let element_orders = elements.iter().map(|p| p.order()).collect::<Vec<_>>();
        let generator_ids = spec.generators.iter().map(|g| index[g]).collect();

        let dense_mul = if n <= DENSE_MUL_LIMIT {
            let mut table = alloc::vec![0u16; n * n];
            for (a, pa) in elements.iter().enumerate() {
                for (b, pb) in elements.iter().enumerate() {
                    table[a * n + b] = index[&pa.compose(pb)?] as u16;
                }
            }
            Some(table)
        } else {
            None
        };

        Ok(GroupTable {
            spec,
            elements,
            index,
            inverses,
            element_orders,
            generator_ids,
            dense_mul,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn element(&self, id: ElemId) -> &Permutation {
        &self.elements[id as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElemId> {
        self.index.get(p).copied()
    }

    pub fn generator_ids(&self) -> &[ElemId] {
        &self.generator_ids
    }

    /// Group product `ab` ("apply a, then b") at id level.
    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.dense_mul {
            Some(t) => t[a as usize * self.elements.len() + b as usize] as ElemId,
            None => {
                let p = self.elements[a as usize]
                    .compose(&self.elements[b as usize])
                    .expect("equal degrees inside one table");
                self.index[&p]
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverses[a as usize]
    }

    #[inline]
    pub fn element_order(&self, a: ElemId) -> u64 {
        self.element_orders[a as usize]
    }

    /// `a^k` for `k >= 0`.
    pub fn pow(&self, a: ElemId, k: u64) -> ElemId {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conjugate(&self, a: ElemId, g: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// Commutator `a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mul(self.mul(self.mul(self.inv(a), self.inv(b)), a), b)
    }

    /// Smallest subset of ids containing `seeds`, closed under composition
    /// and inverse. Always contains the identity.
    pub fn generated_subgroup(&self, seeds: &[ElemId]) -> Result<BitSet, GroupError> {
        if seeds.is_empty() {
            return Err(GroupError::EmptySeeds);
        }
        for &s in seeds {
            if s as usize >= self.order() {
                return Err(GroupError::InvalidId(s));
            }
        }
        Ok(self.closure_from_identity(seeds))
    }

    /// Right-multiplication closure of `{identity}` by `seeds`; in a finite
    /// group this is exactly the generated subgroup.
    pub(crate) fn closure_from_identity(&self, seeds: &[ElemId]) -> BitSet {
        let n = self.order();
        let mut members = BitSet::new(n);
        members.insert(0);
        let mut queue: Vec<ElemId> = alloc::vec![0];
        while let Some(w) = queue.pop() {
            for &s in seeds {
                let p = self.mul(w, s);
                if !members.contains(p as usize) {
                    members.insert(p as usize);
                    queue.push(p);
                }
            }
        }
        members
    }

    /// Subgroup generated by all conjugates of `x`.
    pub fn normal_closure(&self, x: ElemId) -> BitSet {
        let mut seeds: Vec<ElemId> = alloc::vec![x];
        let mut members = self.closure_from_identity(&seeds);
        loop {
            let mut grew = false;
            for m in members.clone().iter() {
                for &g in &self.generator_ids {
                    let c = self.conjugate(m as ElemId, g);
                    if !members.contains(c as usize) {
                        seeds.push(c);
                        members = self.closure_from_identity(&seeds);
                        grew = true;
                    }
                }
            }
            if !grew {
                return members;
            }
        }
    }

    pub fn centralizer(&self, x: ElemId) -> Vec<ElemId> {
        (0..self.order() as ElemId)
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect()
    }

    /// One representative (lowest id) per conjugacy class.
    pub fn conjugacy_class_reps(&self) -> Vec<ElemId> {
        let n = self.order();
        let mut seen = BitSet::new(n);
        let mut reps = Vec::new();
        for x in 0..n as ElemId {
            if seen.contains(x as usize) {
                continue;
            }
            reps.push(x);
            for g in 0..n as ElemId {
                seen.insert(self.conjugate(x, g) as usize);
            }
        }
        reps
    }

    /// True if `set` is closed under products (hence a subgroup, since the
    /// group is finite and the identity is reachable from any element).
    pub fn is_subgroup(&self, set: &BitSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let members: Vec<usize> = set.to_vec();
        for &a in &members {
            for &b in &members {
                if !set.contains(self.mul(a as ElemId, b as ElemId) as usize) {
                    return false;
                }
            }
        }
        true
    }

    /// True if `set` is invariant under conjugation by the whole group
    /// (checking the generators suffices).
    pub fn is_normal(&self, set: &BitSet) -> bool {
        for m in set.iter() {
            for &g in &self.generator_ids {
                if !set.contains(self.conjugate(m as ElemId, g) as usize) {
                    return false;
                }
            }
        }
        true
    }

    /// Left cosets of a subgroup, indexed in order of their lowest element.
    pub fn cosets(&self, subgroup: &BitSet) -> CosetPartition {
        let n = self.order();
        let mut coset_of = alloc::vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut members = Vec::new();
        for x in 0..n as ElemId {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            let mut coset = Vec::new();
            for u in subgroup.iter() {
                let m = self.mul(x, u as ElemId);
                coset_of[m as usize] = c;
                coset.push(m);
            }
            coset.sort_unstable();
            members.push(coset);
        }
        CosetPartition {
            reps,
            coset_of,
            members,
        }
    }

    /// The permutation induced by right multiplication with `x` on the
    /// cosets of a normal subgroup. Mapping elements through this action
    /// is a homomorphism onto the quotient group.
    pub fn coset_action_of(&self, partition: &CosetPartition, x: ElemId) -> Permutation {
        let images: Vec<u16> = partition
            .reps
            .iter()
            .map(|&r| partition.coset_of[self.mul(r, x) as usize] as u16)
            .collect();
        Permutation::from_images(images).expect("coset action of a normal subgroup is a bijection")
    }

    /// Spec for the quotient group acting on the cosets of `normal`.
    pub fn quotient_spec(&self, partition: &CosetPartition, name: impl Into<String>) -> GroupSpec {
        let generators = self
            .generator_ids
            .iter()
            .map(|&g| self.coset_action_of(partition, g))
            .collect();
        GroupSpec {
            name: name.into(),
            degree: partition.coset_count(),
            generators,
        }
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.spec.name)
            .field("degree", &self.spec.degree)
            .field("order", &self.order())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec(name: &str, degree: usize, gens: &[&str]) -> GroupSpec {
        GroupSpec::new(
            name,
            degree,
            gens.iter()
                .map(|g| Permutation::from_cycles(g, degree).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn enumerate_s3() {
        let t = GroupTable::enumerate(spec("S3", 3, &["(1,2)", "(1,2,3)"]), 100).unwrap();
        assert_eq!(t.order(), 6);
        assert!(t.element(0).is_identity());
    }

    #[test]
    fn enumerate_a5_and_s5() {
        let a5 = GroupTable::enumerate(spec("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]), 100).unwrap();
        assert_eq!(a5.order(), 60);
        let s5 = GroupTable::enumerate(spec("S5", 5, &["(1,2)", "(1,2,3,4,5)"]), 200).unwrap();
        assert_eq!(s5.order(), 120);
    }

    #[test]
    fn cap_is_enforced() {
        let err = GroupTable::enumerate(spec("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]), 10);
        assert!(matches!(err, Err(GroupError::CapExceeded { cap: 10 })));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let s = spec("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]);
        let t1 = GroupTable::enumerate(s.clone(), 100).unwrap();
        let t2 = GroupTable::enumerate(s, 100).unwrap();
        assert_eq!(t1.elements(), t2.elements());
    }

    #[test]
    fn mul_matches_composition_and_closure() {
        let t = GroupTable::enumerate(spec("S3", 3, &["(1,2)", "(1,2,3)"]), 100).unwrap();
        for a in 0..t.order() as ElemId {
            for b in 0..t.order() as ElemId {
                let direct = t.element(a).compose(t.element(b)).unwrap();
                assert_eq!(t.id_of(&direct), Some(t.mul(a, b)));
            }
        }
    }

    #[test]
    fn inverse_and_orders() {
        let t = GroupTable::enumerate(spec("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]), 100).unwrap();
        for a in 0..t.order() as ElemId {
            assert_eq!(t.mul(a, t.inv(a)), 0);
            // Lagrange spot-check.
            assert_eq!(t.order() as u64 % t.element_order(a), 0);
        }
    }

    #[test]
    fn generated_subgroups_in_a5() {
        let t = GroupTable::enumerate(spec("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]), 100).unwrap();
        assert_eq!(t.generated_subgroup(&[0]).unwrap().to_vec(), vec![0]);
        let c = t
            .id_of(&Permutation::from_cycles("(1,2,3,4,5)", 5).unwrap())
            .unwrap();
        assert_eq!(t.generated_subgroup(&[c]).unwrap().count(), 5);
        let r = t
            .id_of(&Permutation::from_cycles("(3,4,5)", 5).unwrap())
            .unwrap();
        assert_eq!(t.generated_subgroup(&[c, r]).unwrap().count(), 60);
        assert!(matches!(
            t.generated_subgroup(&[]),
            Err(GroupError::EmptySeeds)
        ));
    }

    #[test]
    fn direct_products() {
        let z2 = spec("Z2", 2, &["(1,2)"]);
        let z2z2 = GroupTable::enumerate(z2.direct_product(&z2), 100).unwrap();
        assert_eq!(z2z2.order(), 4);

        let a5 = spec("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]);
        let prod = a5.direct_product(&z2);
        assert_eq!(prod.degree, 7);
        let t = GroupTable::enumerate(prod, 500).unwrap();
        assert_eq!(t.order(), 120);

        let trivial = GroupSpec::new("1", 1, vec![Permutation::identity(1)]).unwrap();
        let same = GroupTable::enumerate(a5.direct_product(&trivial), 500).unwrap();
        assert_eq!(same.order(), 60);
    }

    #[test]
    fn normal_closure_in_s4() {
        let t = GroupTable::enumerate(spec("S4", 4, &["(1,2)", "(1,2,3,4)"]), 100).unwrap();
        let dt = t
            .id_of(&Permutation::from_cycles("(1,2)(3,4)", 4).unwrap())
            .unwrap();
        // Normal closure of a double transposition in S4 is the Klein group.
        let v4 = t.normal_closure(dt);
        assert_eq!(v4.count(), 4);
        assert!(t.is_subgroup(&v4));
        assert!(t.is_normal(&v4));
        let tr = t
            .id_of(&Permutation::from_cycles("(1,2)", 4).unwrap())
            .unwrap();
        assert_eq!(t.normal_closure(tr).count(), 24);
    }

    #[test]
    fn cosets_and_quotient_action() {
        let t = GroupTable::enumerate(spec("S4", 4, &["(1,2)", "(1,2,3,4)"]), 100).unwrap();
        let a4: Vec<ElemId> = (0..24)
            .filter(|&i| {
                let p = t.element(i);
                // parity via cycle structure: even permutations only
                let moved: usize = (0..4).filter(|&pt| p.image(pt) != pt).count();
                let order = t.element_order(i);
                // crude but correct for S4: 3-cycles, double transpositions, id
                order == 3 || (order == 2 && moved == 4) || order == 1
            })
            .collect();
        let sub = t.generated_subgroup(&a4).unwrap();
        assert_eq!(sub.count(), 12);
        let part = t.cosets(&sub);
        assert_eq!(part.coset_count(), 2);
        let q = t.quotient_spec(&part, "S4/A4");
        let qt = GroupTable::enumerate(q, 10).unwrap();
        assert_eq!(qt.order(), 2);
    }
}
