//! Linear cycle sets and braces as dense index tables.
//!
//! A linear cycle set is an abelian group `(A, +)` with a second operation
//! `·` whose left translations `b ↦ a·b` are bijective and which satisfies
//!
//! * `a·(b+c) = a·b + a·c`          (dot distributes over sum), and
//! * `(a+b)·c = (a·b)·(a·c)`        (sum compatibility).
//!
//! Elements are represented by their indices `0..n`; the additive structure
//! is carried by an [`AddGroup`] table so that carriers with a non
//! coordinatewise sum (such as twisted products arising from extensions) fit
//! the same type.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::abelian::FiniteAbelianGroup;

/// Hard cap on carrier sizes for table-based groups; everything here is
/// desk scale.
pub const MAX_TABLE_ORDER: usize = 1024;

/// A finite abelian group on the index set `0..n` with `0` as the neutral
/// element, given by explicit addition and negation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddGroup {
    /// Present when the carrier is the mixed-radix enumeration of a
    /// coordinate group.
    coords: Option<FiniteAbelianGroup>,
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
}

/// Errors from table construction and validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    /// Table dimensions do not match the carrier size.
    Shape,
    /// Carrier larger than [`MAX_TABLE_ORDER`].
    TooLarge { order: usize },
    /// The addition table is not an abelian group with neutral element 0.
    NotAbelianGroup,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Shape => write!(f, "table shape does not match the carrier size"),
            TableError::TooLarge { order } => {
                write!(f, "carrier of order {order} exceeds the table cap {MAX_TABLE_ORDER}")
            }
            TableError::NotAbelianGroup => {
                write!(f, "addition table is not an abelian group with neutral element 0")
            }
        }
    }
}

impl AddGroup {
    /// Builds the table group of a coordinate group (mixed-radix indexing,
    /// last coordinate fastest).
    pub fn from_group(g: &FiniteAbelianGroup) -> Result<AddGroup, TableError> {
        let n = g
            .order_usize()
            .filter(|&n| n <= MAX_TABLE_ORDER)
            .ok_or(TableError::TooLarge { order: usize::MAX })?;
        let elems: Vec<_> = (0..n).map(|i| g.element_at(i)).collect();
        let add = (0..n)
            .map(|a| (0..n).map(|b| g.index_of(&g.add(&elems[a], &elems[b]))).collect())
            .collect();
        let neg = (0..n).map(|a| g.index_of(&g.neg(&elems[a]))).collect();
        Ok(AddGroup { coords: Some(g.clone()), add, neg })
    }

    /// Builds a table group from raw tables, verifying the abelian group
    /// axioms (commutativity, associativity, neutral 0, negation).
    pub fn from_tables(add: Vec<Vec<usize>>, neg: Vec<usize>) -> Result<AddGroup, TableError> {
        let n = add.len();
        if n == 0 || n > MAX_TABLE_ORDER {
            return Err(TableError::TooLarge { order: n });
        }
        if neg.len() != n || add.iter().any(|row| row.len() != n) {
            return Err(TableError::Shape);
        }
        let in_range =
            |v: usize| -> Result<usize, TableError> { (v < n).then_some(v).ok_or(TableError::Shape) };
        for a in 0..n {
            in_range(neg[a])?;
            if in_range(add[a][0])? != a || in_range(add[0][a])? != a {
                return Err(TableError::NotAbelianGroup);
            }
            if add[a][neg[a]] != 0 {
                return Err(TableError::NotAbelianGroup);
            }
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return Err(TableError::NotAbelianGroup);
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(TableError::NotAbelianGroup);
                    }
                }
            }
        }
        Ok(AddGroup { coords: None, add, neg })
    }

    /// Builds a table group from raw tables that are correct by
    /// construction (e.g. a twisted product of validated groups).
    pub(crate) fn from_tables_trusted(
        coords: Option<FiniteAbelianGroup>,
        add: Vec<Vec<usize>>,
        neg: Vec<usize>,
    ) -> AddGroup {
        AddGroup { coords, add, neg }
    }

    pub fn size(&self) -> usize {
        self.add.len()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add[a][self.neg[b]]
    }

    /// The coordinate group backing this carrier, when it has one.
    pub fn coordinate_group(&self) -> Option<&FiniteAbelianGroup> {
        self.coords.as_ref()
    }

    /// Do `self` and `other` carry the same addition (same tables)?
    pub fn same_tables(&self, other: &AddGroup) -> bool {
        self.add == other.add
    }
}

/// First violated linear-cycle-set axiom, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LcsViolation {
    /// The left translation of `a` is not a permutation.
    NotBijective { a: usize },
    /// `a·(b+c) ≠ a·b + a·c`.
    DotAdd { a: usize, b: usize, c: usize },
    /// `(a+b)·c ≠ (a·b)·(a·c)`.
    AddDot { a: usize, b: usize, c: usize },
}

impl fmt::Display for LcsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcsViolation::NotBijective { a } => {
                write!(f, "left translation of {a} is not bijective")
            }
            LcsViolation::DotAdd { a, b, c } => {
                write!(f, "{a}·({b}+{c}) != {a}·{b} + {a}·{c}")
            }
            LcsViolation::AddDot { a, b, c } => {
                write!(f, "({a}+{b})·{c} != ({a}·{b})·({a}·{c})")
            }
        }
    }
}

/// Errors from [`lcs_from_table`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LcsError {
    Table(TableError),
    Axiom(LcsViolation),
}

impl fmt::Display for LcsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcsError::Table(e) => write!(f, "{e}"),
            LcsError::Axiom(v) => write!(f, "linear cycle set axiom violated: {v}"),
        }
    }
}

/// A validated linear cycle set with cached inverse translations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCycleSet {
    group: AddGroup,
    dot: Vec<Vec<usize>>,
    inv_dot: Vec<Vec<usize>>,
}

impl LinearCycleSet {
    pub fn group(&self) -> &AddGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    /// `a · b`.
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.dot[a][b]
    }

    /// The inverse left translation: the unique `x` with `a · x = b`.
    pub fn inv_dot(&self, a: usize, b: usize) -> usize {
        self.inv_dot[a][b]
    }

    pub fn dot_table(&self) -> &Vec<Vec<usize>> {
        &self.dot
    }

    /// Is this the trivial structure `a·b = b`?
    pub fn is_trivial(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).all(|b| self.dot[a][b] == b))
    }
}

/// Validates a dot table over a carrier group, returning the linear cycle
/// set or the first violated axiom. Violations are searched in the order:
/// bijectivity of each translation (by `a`), then distributivity
/// `a·(b+c) = a·b + a·c`, then `(a+b)·c = (a·b)·(a·c)`, each in
/// lexicographic `(a, b, c)` order.
pub fn lcs_from_table(group: AddGroup, dot: Vec<Vec<usize>>) -> Result<LinearCycleSet, LcsError> {
    let n = group.size();
    if dot.len() != n || dot.iter().any(|row| row.len() != n) {
        return Err(LcsError::Table(TableError::Shape));
    }
    let mut inv_dot = vec![vec![usize::MAX; n]; n];
    for a in 0..n {
        for b in 0..n {
            let v = dot[a][b];
            if v >= n {
                return Err(LcsError::Table(TableError::Shape));
            }
            if inv_dot[a][v] != usize::MAX {
                return Err(LcsError::Axiom(LcsViolation::NotBijective { a }));
            }
            inv_dot[a][v] = b;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if dot[a][group.add(b, c)] != group.add(dot[a][b], dot[a][c]) {
                    return Err(LcsError::Axiom(LcsViolation::DotAdd { a, b, c }));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = dot[a][b];
            let sum = group.add(a, b);
            for c in 0..n {
                if dot[sum][c] != dot[ab][dot[a][c]] {
                    return Err(LcsError::Axiom(LcsViolation::AddDot { a, b, c }));
                }
            }
        }
    }
    Ok(LinearCycleSet { group, dot, inv_dot })
}

/// Builds a linear cycle set from tables known to satisfy the axioms (e.g.
/// reconstructed from a validated structure). Only bijectivity is needed to
/// fill the inverse-translation cache; the axioms are debug-asserted.
pub(crate) fn lcs_from_table_trusted(group: AddGroup, dot: Vec<Vec<usize>>) -> LinearCycleSet {
    let n = group.size();
    let mut inv_dot = vec![vec![usize::MAX; n]; n];
    for a in 0..n {
        for b in 0..n {
            inv_dot[a][dot[a][b]] = b;
        }
    }
    debug_assert!(
        inv_dot.iter().all(|row| row.iter().all(|&v| v != usize::MAX)),
        "trusted dot table has non-bijective translations"
    );
    LinearCycleSet { group, dot, inv_dot }
}

/// The trivial linear cycle set `a·b = b` on a carrier group.
pub fn trivial_lcs(group: AddGroup) -> LinearCycleSet {
    let n = group.size();
    let row: Vec<usize> = (0..n).collect();
    LinearCycleSet {
        group,
        dot: vec![row.clone(); n],
        inv_dot: vec![row; n],
    }
}

/// `y ⊲ a := y·a − a`.
pub fn yleft(lcs: &LinearCycleSet, y: usize, a: usize) -> usize {
    lcs.group.sub(lcs.dot(y, a), a)
}

/// The socle: elements whose left translation is the identity.
pub fn socle(lcs: &LinearCycleSet) -> Vec<usize> {
    (0..lcs.size())
        .filter(|&y| (0..lcs.size()).all(|a| lcs.dot(y, a) == a))
        .collect()
}

/// The center: socle elements fixed by every left translation.
pub fn center(lcs: &LinearCycleSet) -> Vec<usize> {
    socle(lcs)
        .into_iter()
        .filter(|&y| (0..lcs.size()).all(|a| lcs.dot(a, y) == y))
        .collect()
}

/// Errors from [`is_ideal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetError {
    OutOfRange,
    /// The subset is not an additive subgroup.
    NotSubgroup,
}

impl fmt::Display for SubsetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetError::OutOfRange => write!(f, "subset element out of range"),
            SubsetError::NotSubgroup => write!(f, "subset is not an additive subgroup"),
        }
    }
}

/// Is the given subgroup an ideal (`a·y ∈ I` and `y·a − a ∈ I` for every
/// carrier element `a` and `y ∈ I`)? Errors when the subset is not an
/// additive subgroup.
pub fn is_ideal(lcs: &LinearCycleSet, subset: &[usize]) -> Result<bool, SubsetError> {
    let n = lcs.size();
    let mut member = vec![false; n];
    for &y in subset {
        if y >= n {
            return Err(SubsetError::OutOfRange);
        }
        member[y] = true;
    }
    if !member[0] {
        return Err(SubsetError::NotSubgroup);
    }
    for &y in subset {
        if !member[lcs.group.neg(y)] {
            return Err(SubsetError::NotSubgroup);
        }
        for &z in subset {
            if !member[lcs.group.add(y, z)] {
                return Err(SubsetError::NotSubgroup);
            }
        }
    }
    for a in 0..n {
        for &y in subset {
            if !member[lcs.dot(a, y)] || !member[yleft(lcs, y, a)] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A brace: an abelian group with a second (not necessarily commutative)
/// group operation satisfying `a(b+c) = ab + ac − a`, sharing neutral
/// element `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Brace {
    group: AddGroup,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

/// First violated brace axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraceViolation {
    NotGroup,
    /// `a(b+c) ≠ ab + ac − a`.
    Compat { a: usize, b: usize, c: usize },
}

/// Errors from [`brace_from_table`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraceError {
    Table(TableError),
    Axiom(BraceViolation),
}

impl Brace {
    pub fn group(&self) -> &AddGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    /// The brace product `ab`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    /// The multiplicative inverse `a^{-1}`.
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn mul_table(&self) -> &Vec<Vec<usize>> {
        &self.mul
    }

    /// Is the brace trivial (`ab = a + b`)?
    pub fn is_trivial(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).all(|b| self.mul[a][b] == self.group.add(a, b)))
    }
}

/// Validates a multiplication table as a brace over the carrier group.
pub fn brace_from_table(group: AddGroup, mul: Vec<Vec<usize>>) -> Result<Brace, BraceError> {
    let n = group.size();
    if mul.len() != n || mul.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
        return Err(BraceError::Table(TableError::Shape));
    }
    // Group axioms for mul with identity 0.
    let mut inv = vec![usize::MAX; n];
    for a in 0..n {
        if mul[a][0] != a || mul[0][a] != a {
            return Err(BraceError::Axiom(BraceViolation::NotGroup));
        }
        for b in 0..n {
            if mul[a][b] == 0 {
                inv[a] = b;
            }
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(BraceError::Axiom(BraceViolation::NotGroup));
                }
            }
        }
        if inv[a] == usize::MAX || mul[inv[a]][a] != 0 {
            return Err(BraceError::Axiom(BraceViolation::NotGroup));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = mul[a][group.add(b, c)];
                let rhs = group.sub(group.add(mul[a][b], mul[a][c]), a);
                if lhs != rhs {
                    return Err(BraceError::Axiom(BraceViolation::Compat { a, b, c }));
                }
            }
        }
    }
    Ok(Brace { group, mul, inv })
}

/// The brace associated to a linear cycle set: `ab = ᵃb + a`, where `ᵃ(·)`
/// is the inverse left translation.
pub fn lcs_to_brace(lcs: &LinearCycleSet) -> Brace {
    let n = lcs.size();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| lcs.group.add(lcs.inv_dot(a, b), a)).collect())
        .collect();
    let mut inv = vec![usize::MAX; n];
    for a in 0..n {
        for b in 0..n {
            if mul[a][b] == 0 {
                inv[a] = b;
                break;
            }
        }
        debug_assert_ne!(inv[a], usize::MAX, "brace product has inverses");
    }
    Brace { group: lcs.group.clone(), mul, inv }
}

/// The linear cycle set associated to a brace: `a·b = a^{-1}(a + b)`.
pub fn brace_to_lcs(brace: &Brace) -> LinearCycleSet {
    let n = brace.size();
    let dot: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| brace.mul(brace.inv(a), brace.group.add(a, b))).collect())
        .collect();
    // Inverse translation via the correspondence: a·x = b iff x = ab − a.
    let inv_dot: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| brace.group.sub(brace.mul(a, b), a)).collect())
        .collect();
    LinearCycleSet { group: brace.group.clone(), dot, inv_dot }
}

/// Guard error from [`enumerate_lcs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationGuard {
    pub order: usize,
    pub max_order: usize,
}

impl fmt::Display for EnumerationGuard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "enumeration guard: carrier order {} exceeds the limit {}",
            self.order, self.max_order
        )
    }
}

/// All additive automorphisms of a table group, each as a permutation
/// (image indexed by element), in lexicographic order.
pub fn additive_automorphisms(group: &AddGroup) -> Vec<Vec<usize>> {
    let n = group.size();
    additive_endomorphisms(group)
        .into_iter()
        .filter(|map| {
            let mut seen = vec![false; n];
            map.iter().all(|&v| !core::mem::replace(&mut seen[v], true))
        })
        .collect()
}

/// All additive endomorphisms of a table group (maps fixing 0 and
/// preserving addition), in lexicographic order.
pub fn additive_endomorphisms(group: &AddGroup) -> Vec<Vec<usize>> {
    let n = group.size();
    let mut out = Vec::new();
    // DFS over undetermined elements in index order; assigning an image
    // closes the partial map under addition.
    fn close(
        group: &AddGroup,
        map: &mut Vec<usize>,
        assigned: &mut Vec<usize>,
        x: usize,
        v: usize,
    ) -> bool {
        if map[x] != usize::MAX {
            return map[x] == v;
        }
        map[x] = v;
        assigned.push(x);
        let snapshot: Vec<usize> = (0..group.size()).filter(|&e| map[e] != usize::MAX).collect();
        for e in snapshot {
            let (s, sv) = (group.add(e, x), group.add(map[e], v));
            if !close(group, map, assigned, s, sv) {
                return false;
            }
        }
        true
    }
    fn dfs(group: &AddGroup, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = group.size();
        let Some(x) = (0..n).find(|&e| map[e] == usize::MAX) else {
            out.push(map.clone());
            return;
        };
        for v in 0..n {
            let mut trial = map.clone();
            let mut assigned = Vec::new();
            if close(group, &mut trial, &mut assigned, x, v) {
                dfs(group, &mut trial, out);
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    dfs(group, &mut map, &mut out);
    out.sort();
    out
}

/// Exhaustively enumerates every linear cycle set structure on the carrier
/// group, in lexicographic order of the flattened dot table. Structures are
/// counted raw (isomorphic structures appear separately). Guarded by
/// `max_order`.
///
/// Each left translation of a linear cycle set is an additive automorphism
/// (bijectivity plus distributivity), and the translation of `0` is the
/// identity, so the search runs row by row over the automorphism group with
/// sum-compatibility pruning.
pub fn enumerate_lcs(
    group: &AddGroup,
    max_order: usize,
) -> Result<Vec<LinearCycleSet>, EnumerationGuard> {
    let n = group.size();
    if n > max_order {
        return Err(EnumerationGuard { order: n, max_order });
    }
    let auts = additive_automorphisms(group);
    let mut out = Vec::new();
    // rows[a] = index into auts, usize::MAX when unassigned.
    let mut rows: Vec<usize> = vec![usize::MAX; n];
    let identity = auts
        .iter()
        .position(|p| p.iter().enumerate().all(|(i, &v)| i == v))
        .expect("identity is an automorphism");
    rows[0] = identity;

    fn consistent(group: &AddGroup, auts: &[Vec<usize>], rows: &[usize], newest: usize) -> bool {
        let n = group.size();
        for x in 0..n {
            if rows[x] == usize::MAX {
                continue;
            }
            for y in 0..n {
                let sum = group.add(x, y);
                let xy = auts[rows[x]][y];
                if rows[sum] == usize::MAX || rows[xy] == usize::MAX {
                    continue;
                }
                if x != newest && sum != newest && xy != newest {
                    continue;
                }
                let (rs, rt, rx) = (&auts[rows[sum]], &auts[rows[xy]], &auts[rows[x]]);
                if (0..n).any(|c| rs[c] != rt[rx[c]]) {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(
        group: &AddGroup,
        auts: &[Vec<usize>],
        rows: &mut Vec<usize>,
        a: usize,
        out: &mut Vec<LinearCycleSet>,
    ) {
        let n = group.size();
        if a == n {
            let dot: Vec<Vec<usize>> = rows.iter().map(|&r| auts[r].clone()).collect();
            let lcs = lcs_from_table(group.clone(), dot).expect("search invariants imply validity");
            out.push(lcs);
            return;
        }
        for r in 0..auts.len() {
            rows[a] = r;
            if consistent(group, auts, rows, a) {
                dfs(group, auts, rows, a + 1, out);
            }
        }
        rows[a] = usize::MAX;
    }

    if n == 1 {
        return Ok(vec![trivial_lcs(group.clone())]);
    }
    dfs(group, &auts, &mut rows, 1, &mut out);
    Ok(out)
}
