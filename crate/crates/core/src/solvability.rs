//! Solvability testing, solvabilizers and the solvable radical.
//!
//! The central object is [`SolvabilizerTable`]: for every element `x` it
//! stores the set `{ y : <x,y> is solvable }` as a bitset row. The radical
//! is computed twice over, by two independent routes, and the build fails
//! hard if they disagree:
//!
//! * element-wise: `x` lies in the radical iff its normal closure is
//!   solvable (this also yields the largest solvable normal subgroup);
//! * by definition: `x` lies in the radical iff its row is all of `G`.
//!
//! Pair solvability is only ever computed on coset representatives of the
//! radical and then propagated to whole cosets, which is exact: replacing
//! `x, y` by `xu, yv` with `u, v` in the radical never changes whether
//! `<x,y>` is solvable.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;
use crate::group::{CosetPartition, ElemId, GroupError, GroupTable};

/// Above this order the normal-closure radical oracle is skipped and the
/// radical is taken from the row intersection alone (still verified to be
/// a solvable normal subgroup).
const ORACLE_LIMIT: usize = 600;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolvabilityError {
    Group(GroupError),
    /// Argument set is not closed under the group operation.
    NotClosed,
    /// The two radical computations disagree; this signals an
    /// implementation bug and is always fatal.
    RadicalCrossCheck(String),
    /// A guaranteed witness could not be found (fatal bug signal).
    MissingWitness(&'static str),
    /// Operation requires a non-solvable group.
    SolvableGroup,
    /// Element expected outside the radical.
    NotAVertex(ElemId),
}

impl fmt::Display for SolvabilityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolvabilityError::Group(e) => write!(f, "{e}"),
            SolvabilityError::NotClosed => {
                write!(f, "set is not closed under the group operation")
            }
            SolvabilityError::RadicalCrossCheck(s) => {
                write!(f, "radical cross-check failed: {s}")
            }
            SolvabilityError::MissingWitness(w) => {
                write!(f, "required witness not found: {w}")
            }
            SolvabilityError::SolvableGroup => write!(f, "group is solvable"),
            SolvabilityError::NotAVertex(x) => {
                write!(f, "element {x} lies in the solvable radical")
            }
        }
    }
}

impl core::error::Error for SolvabilityError {}

impl From<GroupError> for SolvabilityError {
    fn from(e: GroupError) -> Self {
        SolvabilityError::Group(e)
    }
}

/// Subgroup generated by all commutators of elements of `h`.
///
/// Validates that `h` is closed while sweeping the pairs.
pub fn derived_subgroup(group: &GroupTable, h: &BitSet) -> Result<BitSet, SolvabilityError> {
    if !h.contains(0) {
        return Err(SolvabilityError::NotClosed);
    }
    let members: Vec<ElemId> = h.iter().map(|i| i as ElemId).collect();
    for &a in &members {
        if !h.contains(group.inv(a) as usize) {
            return Err(SolvabilityError::NotClosed);
        }
        for &b in &members {
            if !h.contains(group.mul(a, b) as usize) {
                return Err(SolvabilityError::NotClosed);
            }
        }
    }
    Ok(derived_of_closed(group, &members))
}

fn derived_of_closed(group: &GroupTable, members: &[ElemId]) -> BitSet {
    let mut comms = BitSet::new(group.order());
    for &a in members {
        for &b in members {
            comms.insert(group.commutator(a, b) as usize);
        }
    }
    let seeds: Vec<ElemId> = comms.iter().map(|i| i as ElemId).collect();
    group.closure_from_identity(&seeds)
}

/// True iff the derived series of `h` reaches the trivial group.
pub fn is_solvable_subgroup(group: &GroupTable, h: &BitSet) -> Result<bool, SolvabilityError> {
    let first = derived_subgroup(group, h)?;
    Ok(series_reaches_identity(group, h, first))
}

fn is_solvable_closed(group: &GroupTable, h: &BitSet) -> bool {
    let members: Vec<ElemId> = h.iter().map(|i| i as ElemId).collect();
    let first = derived_of_closed(group, &members);
    series_reaches_identity(group, h, first)
}

fn series_reaches_identity(group: &GroupTable, h: &BitSet, first: BitSet) -> bool {
    // A strictly descending subgroup chain halves the order each step.
    let limit = usize::BITS - group.order().leading_zeros() + 1;
    let mut prev = h.clone();
    let mut current = first;
    for _ in 0..limit {
        if current.count() == 1 {
            return true;
        }
        if current == prev {
            return false;
        }
        prev = current.clone();
        let members: Vec<ElemId> = current.iter().map(|i| i as ElemId).collect();
        current = derived_of_closed(group, &members);
    }
    // The series strictly descends, so the limit can only be hit on a
    // stabilized non-trivial term.
    false
}

/// Per-element solvabilizer sets, the solvable radical and the coset
/// structure used to build the non-solvable graph.
pub struct SolvabilizerTable<'g> {
    group: &'g GroupTable,
    rows: Vec<BitSet>,
    radical: BitSet,
    cosets: CosetPartition,
}

impl<'g> SolvabilizerTable<'g> {
    pub fn build(group: &'g GroupTable) -> Result<Self, SolvabilityError> {
        let n = group.order();
        if n <= ORACLE_LIMIT {
            let radical = radical_by_normal_closures(group)?;
            let cosets = group.cosets(&radical);
            let rows = pairwise_rows(group, &cosets);
            let by_rows = full_row_set(n, &rows);
            if by_rows != radical {
                return Err(SolvabilityError::RadicalCrossCheck(format!(
                    "normal-closure route gives {} elements, row intersection gives {}",
                    radical.count(),
                    by_rows.count()
                )));
            }
            Ok(SolvabilizerTable {
                group,
                rows,
                radical,
                cosets,
            })
        } else {
            let trivial = BitSet::from_indices(n, &[0]);
            let singleton_cosets = group.cosets(&trivial);
            let rows = pairwise_rows(group, &singleton_cosets);
            let radical = full_row_set(n, &rows);
            if !group.is_subgroup(&radical) || !group.is_normal(&radical) {
                return Err(SolvabilityError::RadicalCrossCheck(
                    "row intersection is not a normal subgroup".into(),
                ));
            }
            if !is_solvable_closed(group, &radical) {
                return Err(SolvabilityError::RadicalCrossCheck(
                    "row intersection is not solvable".into(),
                ));
            }
            let cosets = group.cosets(&radical);
            Ok(SolvabilizerTable {
                group,
                rows,
                radical,
                cosets,
            })
        }
    }

    pub fn group(&self) -> &'g GroupTable {
        self.group
    }

    /// The solvable radical as an id set.
    pub fn radical(&self) -> &BitSet {
        &self.radical
    }

    pub fn radical_size(&self) -> usize {
        self.radical.count()
    }

    pub fn is_group_solvable(&self) -> bool {
        self.radical_size() == self.group.order()
    }

    /// True if `x` lies outside the radical, i.e. is a graph vertex.
    pub fn is_vertex(&self, x: ElemId) -> bool {
        !self.radical.contains(x as usize)
    }

    /// Ids outside the radical, ascending.
    pub fn vertex_elements(&self) -> Vec<ElemId> {
        (0..self.group.order() as ElemId)
            .filter(|&x| self.is_vertex(x))
            .collect()
    }

    /// Coset partition of the group by the radical.
    pub fn cosets(&self) -> &CosetPartition {
        &self.cosets
    }

    /// `{ y : <x,y> is solvable }`, including `x` itself and the radical.
    pub fn solvabilizer(&self, x: ElemId) -> &BitSet {
        &self.rows[x as usize]
    }

    pub fn solvabilizer_size(&self, x: ElemId) -> usize {
        self.rows[x as usize].count()
    }

    #[inline]
    pub fn two_gen_solvable(&self, x: ElemId, y: ElemId) -> bool {
        self.rows[x as usize].contains(y as usize)
    }

    /// True iff the solvabilizer of `x` is closed under product and inverse.
    pub fn solvabilizer_is_subgroup(&self, x: ElemId) -> bool {
        self.group.is_subgroup(&self.rows[x as usize])
    }

    /// Lowest-id element outside the radical whose order is a prime `>= 5`.
    ///
    /// Such an element exists in every finite non-solvable group, so a miss
    /// is reported as a fatal bug signal.
    pub fn prime_ge5_witness(&self) -> Result<ElemId, SolvabilityError> {
        if self.is_group_solvable() {
            return Err(SolvabilityError::SolvableGroup);
        }
        for x in 0..self.group.order() as ElemId {
            if !self.is_vertex(x) {
                continue;
            }
            let o = self.group.element_order(x);
            if o >= 5 && is_prime(o) {
                return Ok(x);
            }
        }
        Err(SolvabilityError::MissingWitness(
            "element of prime order >= 5 outside the radical",
        ))
    }

    /// Lowest-id element `s` outside the radical with both `<x,s>` and
    /// `<y,s>` non-solvable. Existence is guaranteed for non-solvable
    /// groups, so a miss is a fatal bug signal.
    pub fn thompson_witness(&self, x: ElemId, y: ElemId) -> Result<ElemId, SolvabilityError> {
        for v in [x, y] {
            if !self.is_vertex(v) {
                return Err(SolvabilityError::NotAVertex(v));
            }
        }
        for s in 0..self.group.order() as ElemId {
            if self.is_vertex(s) && !self.two_gen_solvable(x, s) && !self.two_gen_solvable(y, s) {
                return Ok(s);
            }
        }
        Err(SolvabilityError::MissingWitness(
            "common non-solvable partner",
        ))
    }

    /// Builds the quotient group `G/Sol(G)` as a permutation group on the
    /// cosets, together with the quotient element id of each coset index.
    pub fn quotient_group(&self) -> Result<(GroupTable, Vec<ElemId>), SolvabilityError> {
        let name = format!("{}/Sol", self.group.name());
        let spec = self.group.quotient_spec(&self.cosets, name);
        let k = self.cosets.coset_count();
        let qt = GroupTable::enumerate(spec, k)?;
        if qt.order() != k {
            return Err(SolvabilityError::RadicalCrossCheck(format!(
                "quotient group has order {} but there are {} cosets",
                qt.order(),
                k
            )));
        }
        let mut map = Vec::with_capacity(k);
        for c in 0..k {
            let action = self
                .group
                .coset_action_of(&self.cosets, self.cosets.reps[c]);
            match qt.id_of(&action) {
                Some(q) => map.push(q),
                None => {
                    return Err(SolvabilityError::RadicalCrossCheck(
                        "coset action missing from quotient table".into(),
                    ))
                }
            }
        }
        Ok((qt, map))
    }
}

impl fmt::Debug for SolvabilizerTable<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SolvabilizerTable")
            .field("group", &self.group.name())
            .field("order", &self.group.order())
            .field("radical_size", &self.radical_size())
            .finish()
    }
}

/// `{ x : the normal closure of x is solvable }`, which is exactly the
/// solvable radical; verified to be a solvable normal subgroup.
fn radical_by_normal_closures(group: &GroupTable) -> Result<BitSet, SolvabilityError> {
    let n = group.order();
    let mut radical = BitSet::new(n);
    for x in 0..n as ElemId {
        if radical.contains(x as usize) {
            continue;
        }
        let nc = group.normal_closure(x);
        if is_solvable_closed(group, &nc) {
            // Every member's normal closure sits inside this solvable one.
            radical.union_with(&nc);
        }
    }
    if !group.is_subgroup(&radical) || !group.is_normal(&radical) {
        return Err(SolvabilityError::RadicalCrossCheck(
            "element-wise radical is not a normal subgroup".into(),
        ));
    }
    if !is_solvable_closed(group, &radical) {
        return Err(SolvabilityError::RadicalCrossCheck(
            "element-wise radical is not solvable".into(),
        ));
    }
    Ok(radical)
}

fn full_row_set(n: usize, rows: &[BitSet]) -> BitSet {
    let mut full = BitSet::new(n);
    for (x, row) in rows.iter().enumerate() {
        if row.count() == n {
            full.insert(x);
        }
    }
    full
}

/// Pair solvability on coset representatives, expanded to whole cosets.
fn pairwise_rows(group: &GroupTable, parts: &CosetPartition) -> Vec<BitSet> {
    let n = group.order();
    let k = parts.coset_count();

    let mut rep_solvable: Vec<BitSet> = alloc::vec![BitSet::new(k); k];
    // Distinct two-generated subgroups are far rarer than pairs; memoize the
    // verdict per closure.
    let mut cache: BTreeMap<Vec<u64>, bool> = BTreeMap::new();
    for i in 0..k {
        for j in i..k {
            // Coset 0 contains the identity; pairs meeting the subgroup we
            // quotient by, and pairs inside one coset, are always solvable.
            let solvable = if i == j || i == 0 {
                true
            } else {
                let closure =
                    group.closure_from_identity(&[parts.reps[i], parts.reps[j]]);
                match cache.get(closure.words()) {
                    Some(&b) => b,
                    None => {
                        let b = is_solvable_closed(group, &closure);
                        cache.insert(closure.words().to_vec(), b);
                        b
                    }
                }
            };
            if solvable {
                rep_solvable[i].insert(j);
                rep_solvable[j].insert(i);
            }
        }
    }

    let coset_sets: Vec<BitSet> = parts
        .members
        .iter()
        .map(|m| BitSet::from_indices(n, &m.iter().map(|&e| e as usize).collect::<Vec<_>>()))
        .collect();
    let coset_rows: Vec<BitSet> = (0..k)
        .map(|i| {
            let mut row = BitSet::new(n);
            for j in rep_solvable[i].iter() {
                row.union_with(&coset_sets[j]);
            }
            row
        })
        .collect();
    (0..n)
        .map(|x| coset_rows[parts.coset_of[x] as usize].clone())
        .collect()
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::perm::Permutation;

    fn table(name: &str, degree: usize, gens: &[&str]) -> GroupTable {
        let spec = GroupSpec::new(
            name,
            degree,
            gens.iter()
                .map(|g| Permutation::from_cycles(g, degree).unwrap())
                .collect(),
        )
        .unwrap();
        GroupTable::enumerate(spec, 20_000).unwrap()
    }

    #[test]
    fn derived_series_of_s4() {
        let t = table("S4", 4, &["(1,2)", "(1,2,3,4)"]);
        let all = BitSet::full(24);
        let d1 = derived_subgroup(&t, &all).unwrap();
        assert_eq!(d1.count(), 12); // A4
        let d2 = derived_subgroup(&t, &d1).unwrap();
        assert_eq!(d2.count(), 4); // Klein group
        let d3 = derived_subgroup(&t, &d2).unwrap();
        assert_eq!(d3.count(), 1);
        assert!(is_solvable_subgroup(&t, &all).unwrap());
    }

    #[test]
    fn abelian_groups_have_trivial_derived_subgroup() {
        let t = table("Z6", 6, &["(1,2,3,4,5,6)"]);
        let all = BitSet::full(6);
        assert_eq!(derived_subgroup(&t, &all).unwrap().count(), 1);
        assert!(is_solvable_subgroup(&t, &all).unwrap());
    }

    #[test]
    fn a5_is_perfect_and_not_solvable() {
        let t = table("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]);
        let all = BitSet::full(60);
        assert_eq!(derived_subgroup(&t, &all).unwrap().count(), 60);
        assert!(!is_solvable_subgroup(&t, &all).unwrap());
    }

    #[test]
    fn non_closed_sets_are_rejected() {
        let t = table("S4", 4, &["(1,2)", "(1,2,3,4)"]);
        let four_cycle = t
            .id_of(&Permutation::from_cycles("(1,2,3,4)", 4).unwrap())
            .unwrap();
        let not_closed = BitSet::from_indices(24, &[0, four_cycle as usize]);
        assert!(matches!(
            derived_subgroup(&t, &not_closed),
            Err(SolvabilityError::NotClosed)
        ));
        let no_identity = BitSet::from_indices(24, &[four_cycle as usize]);
        assert!(matches!(
            derived_subgroup(&t, &no_identity),
            Err(SolvabilityError::NotClosed)
        ));
    }

    #[test]
    fn radical_of_a5_is_trivial() {
        let t = table("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]);
        let st = SolvabilizerTable::build(&t).unwrap();
        assert_eq!(st.radical_size(), 1);
        assert!(st.radical().contains(0));
        assert_eq!(st.vertex_elements().len(), 59);
    }

    #[test]
    fn radical_of_solvable_group_is_everything() {
        let t = table("S4", 4, &["(1,2)", "(1,2,3,4)"]);
        let st = SolvabilizerTable::build(&t).unwrap();
        assert_eq!(st.radical_size(), 24);
        assert!(st.is_group_solvable());
    }

    #[test]
    fn solvabilizer_sizes_in_a5() {
        let t = table("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]);
        let st = SolvabilizerTable::build(&t).unwrap();
        let five = t
            .id_of(&Permutation::from_cycles("(1,2,3,4,5)", 5).unwrap())
            .unwrap();
        let three = t
            .id_of(&Permutation::from_cycles("(3,4,5)", 5).unwrap())
            .unwrap();
        let dtr = t
            .id_of(&Permutation::from_cycles("(1,2)(3,4)", 5).unwrap())
            .unwrap();
        assert_eq!(st.solvabilizer_size(five), 10);
        assert_eq!(st.solvabilizer_size(three), 24);
        assert_eq!(st.solvabilizer_size(dtr), 36);
        assert!(!st.two_gen_solvable(five, three));
        assert!(st.two_gen_solvable(five, t.pow(five, 2)));
        assert!(st.two_gen_solvable(five, five));
    }

    #[test]
    fn solvabilizer_rows_are_symmetric_and_reflexive() {
        let t = table("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]);
        let st = SolvabilizerTable::build(&t).unwrap();
        for x in 0..60 {
            assert!(st.two_gen_solvable(x, x));
            for y in 0..60 {
                assert_eq!(st.two_gen_solvable(x, y), st.two_gen_solvable(y, x));
            }
        }
    }

    #[test]
    fn witnesses_in_a5() {
        let t = table("A5", 5, &["(1,2,3,4,5)", "(3,4,5)"]);
        let st = SolvabilizerTable::build(&t).unwrap();
        let w = st.prime_ge5_witness().unwrap();
        assert_eq!(t.element_order(w), 5);

        let five = t
            .id_of(&Permutation::from_cycles("(1,2,3,4,5)", 5).unwrap())
            .unwrap();
        let three = t
            .id_of(&Permutation::from_cycles("(3,4,5)", 5).unwrap())
            .unwrap();
        let s = st.thompson_witness(five, three).unwrap();
        assert!(!st.two_gen_solvable(five, s));
        assert!(!st.two_gen_solvable(three, s));
        let same = st.thompson_witness(five, five).unwrap();
        assert!(!st.two_gen_solvable(five, same));
        assert!(st.thompson_witness(0, five).is_err());
    }

    #[test]
    fn quotient_group_of_solvable_is_trivial() {
        let t = table("S4", 4, &["(1,2)", "(1,2,3,4)"]);
        let st = SolvabilizerTable::build(&t).unwrap();
        let (qt, map) = st.quotient_group().unwrap();
        assert_eq!(qt.order(), 1);
        assert_eq!(map, alloc::vec![0]);
    }

    #[test]
    fn primes() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, alloc::vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
