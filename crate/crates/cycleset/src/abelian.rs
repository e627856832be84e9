//! Finite abelian groups presented as direct sums of cyclic groups, group
//! homomorphisms between them, and the subgroup / quotient / preimage
//! machinery built on Smith normal form.
//!
//! Elements are coordinate vectors against the stored cyclic orders, with
//! mixed-radix enumeration in which the **last** coordinate varies fastest.
//! Orders are stored exactly as given (no silent normalization); the
//! invariant-factor decomposition is available separately.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::matrix::{kernel_basis, smith_normal_form, IntMat, SnfSolver};

/// Errors from the abelian-group layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbelianError {
    /// A cyclic order was zero (orders must be ≥ 1).
    ZeroOrder,
    /// A coordinate vector had the wrong length for its group.
    RankMismatch { expected: usize, got: usize },
    /// A homomorphism matrix had the wrong shape.
    ShapeMismatch,
    /// The matrix does not respect the domain relations, so it defines no
    /// homomorphism. Reports the offending domain generator.
    NotWellDefined { generator: usize },
    /// Two groups expected to be identical differ.
    GroupMismatch,
    /// The generators passed as a subgroup do not lie in the parent group.
    NotInParent,
    /// The group is too large to enumerate element-by-element.
    TooLargeToEnumerate,
}

impl fmt::Display for AbelianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianError::ZeroOrder => write!(f, "cyclic orders must be at least 1"),
            AbelianError::RankMismatch { expected, got } => {
                write!(f, "coordinate vector has {got} entries, group has rank {expected}")
            }
            AbelianError::ShapeMismatch => write!(f, "homomorphism matrix shape mismatch"),
            AbelianError::NotWellDefined { generator } => {
                write!(f, "matrix does not kill the relation on domain generator {generator}")
            }
            AbelianError::GroupMismatch => write!(f, "groups differ"),
            AbelianError::NotInParent => write!(f, "generator outside the parent group"),
            AbelianError::TooLargeToEnumerate => write!(f, "group too large to enumerate"),
        }
    }
}

/// A finite abelian group `Z/n_1 ⊕ … ⊕ Z/n_k`, `n_i ≥ 1`, stored as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

/// An element of a [`FiniteAbelianGroup`]: one coordinate per cyclic factor,
/// each reduced into `[0, n_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

/// Constructs the group with the given cyclic orders.
pub fn group_from_orders(orders: &[u64]) -> Result<FiniteAbelianGroup, AbelianError> {
    if orders.iter().any(|&n| n == 0) {
        return Err(AbelianError::ZeroOrder);
    }
    Ok(FiniteAbelianGroup { orders: orders.to_vec() })
}

impl FiniteAbelianGroup {
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> BigUint {
        self.orders.iter().map(|&n| BigUint::from(n)).product()
    }

    /// Group order as `usize`, when small enough to enumerate.
    pub fn order_usize(&self) -> Option<usize> {
        let mut acc: usize = 1;
        for &n in &self.orders {
            acc = acc.checked_mul(usize::try_from(n).ok()?)?;
        }
        Some(acc)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.orders.len()] }
    }

    pub fn element(&self, coords: &[u64]) -> Result<GroupElement, AbelianError> {
        if coords.len() != self.orders.len() {
            return Err(AbelianError::RankMismatch {
                expected: self.orders.len(),
                got: coords.len(),
            });
        }
        Ok(GroupElement {
            coords: coords.iter().zip(&self.orders).map(|(&c, &n)| c % n).collect(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert_eq!(a.coords.len(), self.orders.len());
        debug_assert_eq!(b.coords.len(), self.orders.len());
        GroupElement {
            coords: self
                .orders
                .iter()
                .zip(a.coords.iter().zip(&b.coords))
                .map(|(&n, (&x, &y))| (x + y) % n)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: self
                .orders
                .iter()
                .zip(&a.coords)
                .map(|(&n, &x)| if x == 0 { 0 } else { n - x })
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// Reduces an integer coordinate vector into the group.
    pub fn reduce(&self, coords: &[BigInt]) -> Result<GroupElement, AbelianError> {
        if coords.len() != self.orders.len() {
            return Err(AbelianError::RankMismatch {
                expected: self.orders.len(),
                got: coords.len(),
            });
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.orders)
                .map(|(c, &n)| {
                    let m = BigInt::from(n);
                    let r = ((c % &m) + &m) % &m;
                    r.to_u64().expect("reduced coordinate fits in u64")
                })
                .collect(),
        })
    }

    /// Lifts an element to an integer vector.
    pub fn lift(&self, a: &GroupElement) -> Vec<BigInt> {
        a.coords.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Mixed-radix index of an element; the last coordinate varies fastest.
    pub fn index_of(&self, a: &GroupElement) -> usize {
        let mut idx: usize = 0;
        for (&n, &c) in self.orders.iter().zip(&a.coords) {
            idx = idx * (n as usize) + c as usize;
        }
        idx
    }

    /// Element with the given mixed-radix index.
    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut coords = vec![0u64; self.orders.len()];
        for i in (0..self.orders.len()).rev() {
            let n = self.orders[i] as usize;
            coords[i] = (idx % n) as u64;
            idx /= n;
        }
        GroupElement { coords }
    }

    /// All elements in mixed-radix order. Errors when the group is too large.
    pub fn elements(&self) -> Result<Vec<GroupElement>, AbelianError> {
        let n = self.order_usize().ok_or(AbelianError::TooLargeToEnumerate)?;
        if n > 1 << 24 {
            return Err(AbelianError::TooLargeToEnumerate);
        }
        Ok((0..n).map(|i| self.element_at(i)).collect())
    }

    /// `i`-th standard generator (coordinate vector `e_i`). Factors with
    /// order 1 yield the zero element.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut z = self.zero();
        if self.orders[i] > 1 {
            z.coords[i] = 1;
        }
        z
    }

    /// Relation matrix `diag(orders)` of the presentation.
    pub fn relation_matrix(&self) -> IntMat {
        IntMat::from_fn(self.rank(), self.rank(), |r, c| {
            if r == c {
                BigInt::from(self.orders[r])
            } else {
                BigInt::zero()
            }
        })
    }

    /// Direct sum, concatenating the cyclic orders.
    pub fn direct_sum(parts: &[&FiniteAbelianGroup]) -> FiniteAbelianGroup {
        FiniteAbelianGroup {
            orders: parts.iter().flat_map(|g| g.orders.iter().copied()).collect(),
        }
    }

    /// Invariant factors (trivial factors omitted), via SNF of the relation
    /// matrix.
    pub fn invariant_factors(&self) -> Vec<u64> {
        invariant_factors_of_relations(&self.relation_matrix(), self.rank())
    }
}

/// Invariant factors of `Z^rank / (column lattice of rel)`, which must be
/// finite. Trivial (= 1) factors omitted; divisibility chain order.
fn invariant_factors_of_relations(rel: &IntMat, rank: usize) -> Vec<u64> {
    let snf = smith_normal_form(rel);
    let diag = snf.diag();
    assert!(diag.len() == rank && diag.iter().all(|d| !d.is_zero()), "quotient is infinite");
    diag.iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("invariant factor fits in u64"))
        .collect()
}

/// A homomorphism between finite abelian groups, stored as the matrix of
/// codomain coordinates of the images of the domain generators (one column
/// per domain generator), canonically reduced mod the codomain orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    matrix: IntMat,
}

impl GroupHom {
    /// Builds a homomorphism, checking shape and well-definedness: for every
    /// domain generator of order `n_i`, `n_i ·` (its image) must vanish.
    pub fn new(
        domain: FiniteAbelianGroup,
        codomain: FiniteAbelianGroup,
        matrix: IntMat,
    ) -> Result<GroupHom, AbelianError> {
        if matrix.rows() != codomain.rank() || matrix.cols() != domain.rank() {
            return Err(AbelianError::ShapeMismatch);
        }
        // Canonical reduction mod codomain orders.
        let reduced = IntMat::from_fn(matrix.rows(), matrix.cols(), |r, c| {
            let n = BigInt::from(codomain.orders[r]);
            ((matrix.at(r, c) % &n) + &n) % &n
        });
        for g in 0..domain.rank() {
            let n = BigInt::from(domain.orders[g]);
            for r in 0..codomain.rank() {
                let m = BigInt::from(codomain.orders[r]);
                if !((reduced.at(r, g) * &n) % &m).is_zero() {
                    return Err(AbelianError::NotWellDefined { generator: g });
                }
            }
        }
        Ok(GroupHom { domain, codomain, matrix: reduced })
    }

    /// The identity homomorphism.
    pub fn identity(g: &FiniteAbelianGroup) -> GroupHom {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            matrix: IntMat::from_fn(g.rank(), g.rank(), |r, c| {
                if r == c && g.orders[r] > 1 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }),
        }
    }

    pub fn zero(domain: &FiniteAbelianGroup, codomain: &FiniteAbelianGroup) -> GroupHom {
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: IntMat::zero(codomain.rank(), domain.rank()),
        }
    }

    pub fn domain(&self) -> &FiniteAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteAbelianGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn apply(&self, a: &GroupElement) -> GroupElement {
        let lifted = self.domain.lift(a);
        let image = self.matrix.mul_vec(&lifted);
        self.codomain.reduce(&image).expect("matrix shape enforced on construction")
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom, AbelianError> {
        if other.codomain != self.domain {
            return Err(AbelianError::GroupMismatch);
        }
        GroupHom::new(
            other.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&other.matrix),
        )
    }

    /// Pointwise sum of two homomorphisms with equal domain and codomain.
    pub fn hom_add(&self, other: &GroupHom) -> Result<GroupHom, AbelianError> {
        if other.domain != self.domain || other.codomain != self.codomain {
            return Err(AbelianError::GroupMismatch);
        }
        let m = IntMat::from_fn(self.matrix.rows(), self.matrix.cols(), |r, c| {
            self.matrix.at(r, c) + other.matrix.at(r, c)
        });
        GroupHom::new(self.domain.clone(), self.codomain.clone(), m)
    }

    pub fn hom_neg(&self) -> GroupHom {
        let m = IntMat::from_fn(self.matrix.rows(), self.matrix.cols(), |r, c| {
            -self.matrix.at(r, c)
        });
        GroupHom::new(self.domain.clone(), self.codomain.clone(), m)
            .expect("negation preserves well-definedness")
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Matrix of the map `Z^domain_rank → Z^codomain_rank` together with the
    /// codomain relations: `[matrix | diag(codomain orders)]`. The integral
    /// column lattice of this block matrix is `matrix·Z + relations`.
    fn matrix_with_codomain_relations(&self) -> IntMat {
        self.matrix.hcat(&self.codomain.relation_matrix())
    }
}

/// A subgroup presented abstractly (in invariant-factor form) together with
/// an injective homomorphism into the parent group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FiniteAbelianGroup,
    pub inclusion: GroupHom,
}

impl Subgroup {
    pub fn order(&self) -> BigUint {
        self.group.order()
    }
}

/// The subgroup of `parent` generated by the given elements, returned in
/// invariant-factor form with its inclusion map.
pub fn subgroup_from_generators(
    parent: &FiniteAbelianGroup,
    gens: &[GroupElement],
) -> Result<Subgroup, AbelianError> {
    for g in gens {
        if g.coords.len() != parent.rank() {
            return Err(AbelianError::NotInParent);
        }
        for (&c, &n) in g.coords.iter().zip(&parent.orders) {
            if c >= n {
                return Err(AbelianError::NotInParent);
            }
        }
    }
    let cols: Vec<Vec<BigInt>> = gens.iter().map(|g| parent.lift(g)).collect();
    let gen_mat = IntMat::from_columns(parent.rank(), &cols);
    subgroup_from_lattice(parent, &gen_mat)
}

/// Subgroup of `parent` generated (in the parent) by the columns of
/// `gen_mat` taken mod the parent relations.
fn subgroup_from_lattice(
    parent: &FiniteAbelianGroup,
    gen_mat: &IntMat,
) -> Result<Subgroup, AbelianError> {
    // Lattice of the subgroup's preimage in Z^rank: columns of W.
    let w = gen_mat.hcat(&parent.relation_matrix());
    // Relations among the columns of W relative to the parent relations:
    // kernel of [W | relations], projected onto the W-block.
    let ker = kernel_basis(&w.hcat(&parent.relation_matrix()));
    let rel = IntMat::from_fn(w.cols(), ker.cols(), |r, c| ker.at(r, c).clone());
    // The subgroup is Z^{w.cols} / rel; diagonalize.
    let snf = smith_normal_form(&rel);
    let diag = snf.diag();
    assert!(
        diag.len() == w.cols() && diag.iter().all(|d| !d.is_zero()),
        "subgroup of a finite group must be finite"
    );
    // Generator i of the diagonalized quotient corresponds to column i of
    // u_inv in Z^{w.cols}, i.e. to W · u_inv[:, i] in the parent.
    let mut orders: Vec<u64> = Vec::new();
    let mut incl_cols: Vec<Vec<BigInt>> = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        orders.push(d.to_u64().expect("order fits in u64"));
        incl_cols.push(w.mul_vec(&snf.u_inv.column(i)));
    }
    let group = FiniteAbelianGroup { orders };
    let incl_mat = IntMat::from_columns(parent.rank(), &incl_cols);
    let inclusion = GroupHom::new(group.clone(), parent.clone(), incl_mat)?;
    Ok(Subgroup { group, inclusion })
}

/// Kernel of a homomorphism, as a subgroup of its domain.
pub fn hom_kernel(h: &GroupHom) -> Subgroup {
    // Preimage lattice {x : matrix·x ∈ codomain relations}: kernel of
    // [matrix | relations] projected onto the x-block.
    let ker = kernel_basis(&h.matrix_with_codomain_relations());
    let proj = IntMat::from_fn(h.domain.rank(), ker.cols(), |r, c| ker.at(r, c).clone());
    subgroup_from_lattice(&h.domain, &proj).expect("kernel lattice lies in the domain")
}

/// Image of a homomorphism, as a subgroup of its codomain.
pub fn hom_image(h: &GroupHom) -> Subgroup {
    subgroup_from_lattice(&h.codomain, &h.matrix).expect("image lies in the codomain")
}

/// Invariant factors of `parent / ⟨gens⟩` (trivial factors omitted).
pub fn quotient_invariants(
    parent: &FiniteAbelianGroup,
    gens: &[GroupElement],
) -> Result<Vec<u64>, AbelianError> {
    for g in gens {
        if g.coords.len() != parent.rank() {
            return Err(AbelianError::NotInParent);
        }
    }
    let cols: Vec<Vec<BigInt>> = gens.iter().map(|g| parent.lift(g)).collect();
    let gen_mat = IntMat::from_columns(parent.rank(), &cols);
    let rel = gen_mat.hcat(&parent.relation_matrix());
    Ok(invariant_factors_of_relations(&rel, parent.rank()))
}

/// Invariant factors of the quotient of `parent` by the image of a subgroup
/// inclusion.
pub fn quotient_by_subgroup(parent: &FiniteAbelianGroup, sub: &Subgroup) -> Vec<u64> {
    assert_eq!(sub.inclusion.codomain(), parent, "subgroup of a different parent");
    let rel = sub.inclusion.matrix.hcat(&parent.relation_matrix());
    invariant_factors_of_relations(&rel, parent.rank())
}

/// The lexicographically least preimage of `y` under `h` (coordinates
/// compared left to right), or `None` when `y` is not in the image.
pub fn preimage(h: &GroupHom, y: &GroupElement) -> Option<GroupElement> {
    if y.coords.len() != h.codomain.rank() {
        return None;
    }
    let k = h.domain.rank();
    let target = h.codomain.lift(y);
    // Fix coordinates one at a time, testing feasibility of the remainder by
    // an exact integer solve. A solution with every coordinate in range
    // exists whenever any integer solution exists, because each domain
    // relation shifts a single coordinate by its order.
    let mut fixed: Vec<u64> = Vec::with_capacity(k);
    for j in 0..k {
        let mut found = false;
        for c in 0..h.domain.orders[j] {
            fixed.push(c);
            if solvable_with_prefix(h, &target, &fixed) {
                found = true;
                break;
            }
            fixed.pop();
        }
        if !found {
            return None;
        }
    }
    debug_assert_eq!(fixed.len(), k);
    let elem = GroupElement { coords: fixed };
    debug_assert_eq!(&h.apply(&elem), y);
    Some(elem)
}

/// Is there an integer solution of `h.matrix · x ≡ target (mod codomain)`
/// whose first coordinates equal `prefix`?
fn solvable_with_prefix(h: &GroupHom, target: &[BigInt], prefix: &[u64]) -> bool {
    let k = h.domain.rank();
    let l = h.codomain.rank();
    let free = k - prefix.len();
    let mut rhs: Vec<BigInt> = target.to_vec();
    for (j, &c) in prefix.iter().enumerate() {
        for r in 0..l {
            let v = &rhs[r] - h.matrix.at(r, j) * BigInt::from(c);
            rhs[r] = v;
        }
    }
    let a = IntMat::from_fn(l, free + l, |r, c| {
        if c < free {
            h.matrix.at(r, prefix.len() + c).clone()
        } else if c - free == r {
            BigInt::from(h.codomain.orders[r])
        } else {
            BigInt::zero()
        }
    });
    crate::matrix::solve(&a, &rhs).is_some()
}

/// Pre-factored solver for repeated preimage queries `h(x) = y` against a
/// fixed homomorphism. Returns *some* preimage (deterministic, but not
/// necessarily lexicographically least); use [`preimage`] when the least
/// solution matters.
pub struct HomSolver {
    domain: FiniteAbelianGroup,
    solver: SnfSolver,
}

impl HomSolver {
    pub fn new(h: &GroupHom) -> HomSolver {
        HomSolver {
            domain: h.domain.clone(),
            solver: SnfSolver::new(&h.matrix_with_codomain_relations()),
        }
    }

    pub fn solve(&self, y: &GroupElement) -> Option<GroupElement> {
        let rhs: Vec<BigInt> = y.coords.iter().map(|&c| BigInt::from(c)).collect();
        let x = self.solver.solve(&rhs)?;
        Some(
            self.domain
                .reduce(&x[..self.domain.rank()])
                .expect("solver output has domain rank"),
        )
    }
}

/// Expresses `inner` through `through`: given an injective inclusion
/// `through: K → G` and a homomorphism `inner: X → G` whose image lies in
/// the image of `through`, returns the unique `lift: X → K` with
/// `through ∘ lift = inner`. Errors when some generator image is not in the
/// image of `through`.
pub fn lift_through(through: &GroupHom, inner: &GroupHom) -> Result<GroupHom, AbelianError> {
    if inner.codomain != through.codomain {
        return Err(AbelianError::GroupMismatch);
    }
    let solver = HomSolver::new(through);
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(inner.domain.rank());
    for g in 0..inner.domain.rank() {
        let img = inner
            .codomain
            .reduce(&inner.matrix.column(g))
            .expect("column has codomain rank");
        let pre = solver.solve(&img).ok_or(AbelianError::NotInParent)?;
        cols.push(through.domain.lift(&pre));
    }
    GroupHom::new(
        inner.domain.clone(),
        through.domain.clone(),
        IntMat::from_columns(through.domain.rank(), &cols),
    )
}

/// Human-readable `Z/n_1 ⊕ …` rendering used by diagnostics.
pub fn describe_group(g: &FiniteAbelianGroup) -> String {
    if g.rank() == 0 {
        return String::from("0");
    }
    let parts: Vec<String> = g.orders.iter().map(|n| format!("Z/{n}")).collect();
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FiniteAbelianGroup {
        group_from_orders(orders).unwrap()
    }

    fn hom(d: &[u64], c: &[u64], entries: &[i64]) -> GroupHom {
        let dg = g(d);
        let cg = g(c);
        let m = IntMat::from_fn(cg.rank(), dg.rank(), |r, col| {
            BigInt::from(entries[r * dg.rank() + col])
        });
        GroupHom::new(dg, cg, m).unwrap()
    }

    #[test]
    fn mixed_radix_last_coordinate_fastest() {
        let grp = g(&[2, 3]);
        let e = grp.element_at(4);
        assert_eq!(e.coords(), &[1, 1]);
        assert_eq!(grp.index_of(&e), 4);
        for i in 0..6 {
            assert_eq!(grp.index_of(&grp.element_at(i)), i);
        }
    }

    #[test]
    fn hom_well_definedness_is_checked() {
        // Z/2 -> Z/4 by 1 ↦ 1 is not well defined (2·1 ≠ 0 in Z/4).
        let m = IntMat::from_fn(1, 1, |_, _| BigInt::one());
        assert_eq!(
            GroupHom::new(g(&[2]), g(&[4]), m).unwrap_err(),
            AbelianError::NotWellDefined { generator: 0 }
        );
        // 1 ↦ 2 is fine.
        let m = IntMat::from_fn(1, 1, |_, _| BigInt::from(2));
        assert!(GroupHom::new(g(&[2]), g(&[4]), m).is_ok());
    }

    /// Frozen oracle for kernel/image/quotient: multiplication by 2 on
    /// Z/4 ⊕ Z/2 (diagonal). Kernel = {(0,0),(2,0),(0,1),(2,1)} ≅ Z/2 ⊕ Z/2,
    /// image = {(0,0),(2,0)} ≅ Z/2, quotient by image ≅ Z/2 ⊕ Z/2.
    #[test]
    fn kernel_image_quotient_mul2_oracle() {
        let h = hom(&[4, 2], &[4, 2], &[2, 0, 0, 2]);
        let ker = hom_kernel(&h);
        assert_eq!(ker.group.invariant_factors(), vec![2, 2]);
        // Inclusion is injective and lands in the true kernel.
        let elems = ker.group.elements().unwrap();
        let mut seen = alloc::collections::BTreeSet::new();
        for e in &elems {
            let img = ker.inclusion.apply(e);
            assert_eq!(h.apply(&img), h.codomain().zero());
            assert!(seen.insert(img));
        }
        assert_eq!(seen.len(), 4);

        let im = hom_image(&h);
        assert_eq!(im.group.invariant_factors(), vec![2]);
        let q = quotient_by_subgroup(h.codomain(), &im);
        assert_eq!(q, vec![2, 2]);
    }

    /// Brute-force cross-check of kernel and image against enumeration on a
    /// non-diagonal map.
    #[test]
    fn kernel_image_match_enumeration() {
        // Z/6 ⊕ Z/4 → Z/12, (a, b) ↦ 2a + 3b.
        let h = hom(&[6, 4], &[12], &[2, 3]);
        let dom = h.domain().clone();
        let mut ker_elems = alloc::collections::BTreeSet::new();
        let mut img_elems = alloc::collections::BTreeSet::new();
        for e in dom.elements().unwrap() {
            let v = h.apply(&e);
            if v == h.codomain().zero() {
                ker_elems.insert(e.clone());
            }
            img_elems.insert(v);
        }
        let ker = hom_kernel(&h);
        assert_eq!(ker.order(), BigUint::from(ker_elems.len()));
        for e in ker.group.elements().unwrap() {
            assert!(ker_elems.contains(&ker.inclusion.apply(&e)));
        }
        let im = hom_image(&h);
        assert_eq!(im.order(), BigUint::from(img_elems.len()));
        for e in im.group.elements().unwrap() {
            assert!(img_elems.contains(&im.inclusion.apply(&e)));
        }
    }

    /// Frozen oracle: multiplication by 2 on Z/4, preimage of 2 is the
    /// least solution among {1, 3}, namely 1.
    #[test]
    fn preimage_returns_least_solution() {
        let h = hom(&[4], &[4], &[2]);
        let y = h.codomain().element(&[2]).unwrap();
        let x = preimage(&h, &y).unwrap();
        assert_eq!(x.coords(), &[1]);
        // 1 has no preimage under doubling mod 4.
        let y1 = h.codomain().element(&[1]).unwrap();
        assert!(preimage(&h, &y1).is_none());
    }

    #[test]
    fn preimage_least_is_lex_least_by_enumeration() {
        let h = hom(&[4, 6], &[2, 12], &[1, 1, 3, 2]);
        let dom = h.domain().clone();
        for y in h.codomain().elements().unwrap() {
            let expected = dom
                .elements()
                .unwrap()
                .into_iter()
                .find(|x| h.apply(x) == y);
            let got = preimage(&h, &y);
            assert_eq!(got, expected, "preimage of {:?}", y.coords());
        }
    }

    #[test]
    fn quotient_invariants_by_generators() {
        let grp = g(&[4, 4]);
        let gens = [grp.element(&[2, 0]).unwrap()];
        assert_eq!(quotient_invariants(&grp, &gens).unwrap(), vec![2, 4]);
        let all = [grp.element(&[1, 0]).unwrap(), grp.element(&[0, 1]).unwrap()];
        assert_eq!(quotient_invariants(&grp, &all).unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn lift_through_factors_maps() {
        // Inclusion 2Z/4 ⊂ Z/4 and the doubling map Z/4 → Z/4.
        let h = hom(&[4], &[4], &[2]);
        let im = hom_image(&h);
        let lifted = lift_through(&im.inclusion, &h).unwrap();
        assert_eq!(im.inclusion.compose(&lifted).unwrap(), h);
    }

    #[test]
    fn trivial_groups_are_handled() {
        let z = g(&[]);
        assert_eq!(z.order_usize(), Some(1));
        assert_eq!(z.elements().unwrap().len(), 1);
        let one = g(&[1]);
        assert_eq!(one.order_usize(), Some(1));
        assert_eq!(one.invariant_factors(), Vec::<u64>::new());
        let h = GroupHom::zero(&one, &z);
        assert_eq!(hom_kernel(&h).order(), BigUint::from(1u32));
    }
}
