//! Root data of finite type, built from a Cartan matrix.
//!
//! Conventions, fixed once here and relied on everywhere else:
//!
//! * `a[i][j] = <alpha_j, alphacheck_i>`: column `j` of the Cartan matrix
//!   holds the fundamental coordinates of the simple root `alpha_j`.
//! * A [`Weight`] stores fundamental-weight coordinates; coordinate `i` is
//!   the pairing with the simple coroot `alphacheck_i`. Dominant means all
//!   coordinates are nonnegative.
//! * A [`RootVector`] stores simple-root coordinates. Its height is the sum
//!   of the coordinates.
//!
//! Finite type is decided constructively: the reflection closure of the
//! simple roots must terminate within [`ROOT_CLOSURE_BOUND`] positive roots.
//! The Weyl group is enumerated lazily and only on demand, capped at
//! [`WEYL_ORDER_BOUND`] elements.

// Index loops over matrix rows and columns stay as written: the indices
// carry meaning (row = coroot, column = root) that enumerate() obscures.
#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;
use crate::Result;

/// Positive-root closures larger than this are rejected as not finite type.
pub const ROOT_CLOSURE_BOUND: usize = 10_000;

/// Weyl groups larger than this are not enumerated.
pub const WEYL_ORDER_BOUND: u64 = 1_000_000;

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<i64>,
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    coords: Vec<i64>,
}

macro_rules! coord_vector_impl {
    ($t:ident) => {
        impl $t {
            pub fn new(coords: Vec<i64>) -> Self {
                Self { coords }
            }

            pub fn zero(rank: usize) -> Self {
                Self {
                    coords: vec![0; rank],
                }
            }

            pub fn coords(&self) -> &[i64] {
                &self.coords
            }

            pub fn rank(&self) -> usize {
                self.coords.len()
            }

            pub fn is_zero(&self) -> bool {
                self.coords.iter().all(|&c| c == 0)
            }

            pub fn add(&self, other: &Self) -> Self {
                assert_eq!(self.rank(), other.rank(), "rank mismatch");
                Self {
                    coords: self
                        .coords
                        .iter()
                        .zip(&other.coords)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }

            pub fn sub(&self, other: &Self) -> Self {
                assert_eq!(self.rank(), other.rank(), "rank mismatch");
                Self {
                    coords: self
                        .coords
                        .iter()
                        .zip(&other.coords)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }

            pub fn neg(&self) -> Self {
                Self {
                    coords: self.coords.iter().map(|c| -c).collect(),
                }
            }

            pub fn scale(&self, k: i64) -> Self {
                Self {
                    coords: self.coords.iter().map(|c| c * k).collect(),
                }
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{:?}", stringify!($t), self.coords)
            }
        }
    };
}

coord_vector_impl!(Weight);
coord_vector_impl!(RootVector);

impl RootVector {
    /// Sum of the simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// True when every coordinate is nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }
}

/// A validated integer Cartan matrix: square, 2 on the diagonal,
/// nonpositive off the diagonal, with a symmetric zero pattern.
#[derive(Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::MalformedCartan {
                reason: "empty matrix".into(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedCartan {
                    reason: format!("row {i} has {} entries, expected {n}", row.len()),
                });
            }
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::MalformedCartan {
                    reason: format!("diagonal entry ({i},{i}) is {}, expected 2", entries[i][i]),
                });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::MalformedCartan {
                        reason: format!("off-diagonal entry ({i},{j}) is positive"),
                    });
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::MalformedCartan {
                        reason: format!("asymmetric zero pattern at ({i},{j})"),
                    });
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    /// The Cartan matrix of a named series member: `A1`..`A8`, `B2`..`B4`,
    /// `C2`..`C4`, `D4`, `G2`, `F4`.
    pub fn from_symbol(symbol: &str) -> Option<CartanMatrix> {
        if !symbol.is_char_boundary(1) || symbol.len() < 2 {
            return None;
        }
        let (series, rank_str) = symbol.split_at(1);
        let n: usize = rank_str.parse().ok()?;
        let tridiagonal = |n: usize| -> Vec<Vec<i64>> {
            let mut a = vec![vec![0i64; n]; n];
            for i in 0..n {
                a[i][i] = 2;
                if i + 1 < n {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
            }
            a
        };
        let entries = match (series, n) {
            ("A", 1..=8) => tridiagonal(n),
            ("B", 2..=4) => {
                let mut a = tridiagonal(n);
                a[n - 2][n - 1] = -2;
                a
            }
            ("C", 2..=4) => {
                let mut a = tridiagonal(n);
                a[n - 1][n - 2] = -2;
                a
            }
            ("D", 4) => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ],
            ("G", 2) => vec![vec![2, -1], vec![-3, 2]],
            ("F", 4) => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
            _ => return None,
        };
        Some(CartanMatrix { entries })
    }

    /// All symbols accepted by [`CartanMatrix::from_symbol`].
    pub fn known_symbols() -> Vec<&'static str> {
        vec![
            "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "C2", "C3", "C4",
            "D4", "G2", "F4",
        ]
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    fn flatten(&self) -> Vec<i64> {
        self.entries.iter().flatten().copied().collect()
    }
}

impl fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CartanMatrix{:?}", self.entries)
    }
}

/// A Weyl group element: its matrix on fundamental coordinates, its Coxeter
/// length, and one reduced word in the simple reflections.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    length: u32,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Linear action on fundamental coordinates.
    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.matrix.len();
        assert_eq!(w.rank(), n, "rank mismatch");
        let mut out = vec![0i64; n];
        for (i, row) in self.matrix.iter().enumerate() {
            out[i] = row.iter().zip(w.coords()).map(|(m, c)| m * c).sum();
        }
        Weight::new(out)
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len {}, word {:?})", self.length, self.word)
    }
}

/// Interning table mapping each distinct Cartan matrix to a small id, so
/// memo tables elsewhere can key on `(datum id, argument)`.
static INTERNED: OnceLock<Mutex<HashMap<Vec<i64>, u64>>> = OnceLock::new();

fn intern(cartan: &CartanMatrix) -> u64 {
    let mut table = INTERNED
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .expect("intern table poisoned");
    let next = table.len() as u64;
    *table.entry(cartan.flatten()).or_insert(next)
}

/// A finite root datum: the validated Cartan matrix together with the data
/// derived from it (positive roots, adjugate, symmetrizers, pairings).
///
/// Weyl group data is computed lazily; all lazily filled caches are behind
/// `OnceLock` and safe to share across threads.
pub struct RootDatum {
    cartan: CartanMatrix,
    rank: usize,
    id: u64,
    positive_roots: Vec<RootVector>,
    /// det(A) and adj(A) with A * adj(A) = det(A) * I; inverse as exact
    /// rationals adj/det.
    det: i64,
    adjugate: Vec<Vec<i64>>,
    /// Symmetrizers d with d[i] * a[i][j] = d[j] * a[j][i]; the invariant
    /// form is (alpha_i, alpha_j) = d[i] * a[i][j].
    sym_d: Vec<i64>,
    /// Pairing of each fundamental weight with the sum of positive coroots,
    /// doubled: `two_rho_pairings[i] = <omega_i, 2 rhocheck>`.
    two_rho_pairings: Vec<i64>,
    weyl: OnceLock<Result<WeylGroup>>,
    weyl_order: OnceLock<Result<u64>>,
}

/// The fully enumerated Weyl group, sorted by (length, word).
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The unique element of maximal length.
    pub fn longest_element(&self) -> &WeylElement {
        self.elements.last().expect("nonempty group")
    }
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootDatum(rank {}, {} positive roots)",
            self.rank,
            self.positive_roots.len()
        )
    }
}

impl RootDatum {
    /// Builds the datum, deciding finite type by reflection closure.
    pub fn build(cartan: CartanMatrix) -> Result<RootDatum> {
        let rank = cartan.rank();
        let positive_roots = positive_root_closure(&cartan)?;
        let (det, adjugate) = adjugate_and_det(&cartan);
        if det == 0 {
            return Err(Error::internal(
                "finite-type closure succeeded on a singular matrix",
            ));
        }
        let sym_d = symmetrizers(&cartan)?;
        let mut two_rho_pairings = Vec::with_capacity(rank);
        for i in 0..rank {
            // <omega_i, 2 rhocheck> = 2 * sum_j (A^{-1})_{j i}: twice the
            // height of omega_i written in simple-root coordinates. Always
            // an integer because 2 rhocheck lies in the coroot lattice.
            let num: i64 = (0..rank).map(|j| 2 * adjugate[j][i]).sum();
            if num % det != 0 {
                return Err(Error::internal(format!(
                    "pairing of fundamental weight {i} with twice the dominant coweight sum is not integral"
                )));
            }
            two_rho_pairings.push(num / det);
        }
        let id = intern(&cartan);
        Ok(RootDatum {
            cartan,
            rank,
            id,
            positive_roots,
            det,
            adjugate,
            sym_d,
            two_rho_pairings,
            weyl: OnceLock::new(),
            weyl_order: OnceLock::new(),
        })
    }

    /// Builds the datum for a named series member.
    pub fn from_symbol(symbol: &str) -> Result<RootDatum> {
        let cartan = CartanMatrix::from_symbol(symbol).ok_or_else(|| Error::MalformedCartan {
            reason: format!("unknown type symbol {symbol:?}"),
        })?;
        RootDatum::build(cartan)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Stable identifier for this Cartan matrix, shared by equal matrices.
    pub fn fingerprint(&self) -> u64 {
        self.id
    }

    /// Positive roots in simple-root coordinates, sorted by (height, coords).
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut coords = vec![0i64; self.rank];
        coords[i] = 1;
        RootVector::new(coords)
    }

    /// The simple root `alpha_i` in fundamental coordinates: column `i` of
    /// the Cartan matrix.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight::new((0..self.rank).map(|k| self.cartan.entry(k, i)).collect())
    }

    /// The all-ones dominant weight (sum of the fundamental weights).
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank])
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// Fundamental coordinates of a root-lattice element: `c = A b`.
    pub fn root_to_weight(&self, b: &RootVector) -> Weight {
        assert_eq!(b.rank(), self.rank, "rank mismatch");
        let mut coords = vec![0i64; self.rank];
        for i in 0..self.rank {
            coords[i] = (0..self.rank)
                .map(|j| self.cartan.entry(i, j) * b.coords()[j])
                .sum();
        }
        Weight::new(coords)
    }

    /// Simple-root coordinates of a weight, when the weight lies in the
    /// root lattice: `b = adj(A) c / det(A)` with every division exact.
    pub fn weight_to_root(&self, w: &Weight) -> Option<RootVector> {
        assert_eq!(w.rank(), self.rank, "rank mismatch");
        let mut coords = vec![0i64; self.rank];
        for j in 0..self.rank {
            let num: i64 = (0..self.rank)
                .map(|k| self.adjugate[j][k] * w.coords()[k])
                .sum();
            if num % self.det != 0 {
                return None;
            }
            coords[j] = num / self.det;
        }
        Some(RootVector::new(coords))
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.coords().iter().all(|&c| c >= 0)
    }

    /// True when `w` is a nonnegative integer combination of simple roots.
    pub fn in_pos_cone(&self, w: &Weight) -> bool {
        matches!(self.weight_to_root(w), Some(b) if b.is_nonneg())
    }

    /// True when `w` is a nonpositive integer combination of simple roots.
    pub fn in_neg_cone(&self, w: &Weight) -> bool {
        self.in_pos_cone(&w.neg())
    }

    /// Pairing with twice the sum of the fundamental coweights. On the root
    /// lattice this is twice the height.
    pub fn pairing_2rho(&self, w: &Weight) -> i64 {
        assert_eq!(w.rank(), self.rank, "rank mismatch");
        w.coords()
            .iter()
            .zip(&self.two_rho_pairings)
            .map(|(c, t)| c * t)
            .sum()
    }

    /// The partial order in which stabilization chains are cofinal:
    /// `w1 <= w2` iff `w2 - w1` is dominant. Both arguments must be
    /// dominant.
    pub fn leq_dominant_diff(&self, w1: &Weight, w2: &Weight) -> Result<bool> {
        self.check_rank(w1)?;
        self.check_rank(w2)?;
        for w in [w1, w2] {
            if !self.is_dominant(w) {
                return Err(Error::NotDominant {
                    coords: w.coords().to_vec(),
                });
            }
        }
        Ok(self.is_dominant(&w2.sub(w1)))
    }

    /// Reflection in the `i`-th simple root: `w - <w, acheck_i> alpha_i`.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Weight {
        assert!(i < self.rank, "reflection index out of range");
        let c = w.coords()[i];
        let alpha = self.simple_root_weight(i);
        w.sub(&alpha.scale(c))
    }

    /// The dominant Weyl-orbit representative of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut v = w.clone();
        loop {
            match v.coords().iter().position(|&c| c < 0) {
                Some(i) => v = self.simple_reflection(i, &v),
                None => return v,
            }
        }
    }

    /// The dominant representative together with the sign of the Weyl
    /// element used to reach it, or `None` when `w` lies on a wall.
    pub fn dominant_representative_signed(&self, w: &Weight) -> Option<(Weight, i64)> {
        let mut v = w.clone();
        let mut sign = 1i64;
        loop {
            if v.coords().contains(&0) {
                // A zero coordinate at any point of the descent means a
                // reflection fixes the weight.
                if self.is_dominant(&v) {
                    return None;
                }
            }
            match v.coords().iter().position(|&c| c < 0) {
                Some(i) => {
                    v = self.simple_reflection(i, &v);
                    sign = -sign;
                }
                None => {
                    if v.coords().contains(&0) {
                        return None;
                    }
                    return Some((v, sign));
                }
            }
        }
    }

    /// Scaled invariant form: `det(A) * (x, y)`, always an integer.
    ///
    /// The form is `(alpha_i, alpha_j) = d_i a[i][j]`; on fundamental
    /// coordinates it evaluates through the adjugate so no rationals appear.
    pub fn scaled_form(&self, x: &Weight, y: &Weight) -> i128 {
        assert_eq!(x.rank(), self.rank, "rank mismatch");
        assert_eq!(y.rank(), self.rank, "rank mismatch");
        // det * (x, y) = sum_j y_j d_j (adj(A) x)_j.
        let mut total: i128 = 0;
        for j in 0..self.rank {
            let bx: i128 = (0..self.rank)
                .map(|k| self.adjugate[j][k] as i128 * x.coords()[k] as i128)
                .sum();
            total += y.coords()[j] as i128 * self.sym_d[j] as i128 * bx;
        }
        total
    }

    /// Pairing of a weight with the coroot of a positive root,
    /// `<w, betacheck> = 2 (w, beta) / (beta, beta)`, exact.
    pub fn pairing_coroot(&self, w: &Weight, beta: &RootVector) -> i64 {
        let beta_w = self.root_to_weight(beta);
        let num = 2 * self.scaled_form(w, &beta_w);
        let den = self.scaled_form(&beta_w, &beta_w);
        assert!(den > 0, "positive root with nonpositive norm");
        assert_eq!(num % den, 0, "coroot pairing must be integral");
        i64::try_from(num / den).expect("coroot pairing overflow")
    }

    /// The Weyl group, enumerated on first use.
    pub fn weyl_group(&self) -> Result<&WeylGroup> {
        self.weyl
            .get_or_init(|| enumerate_weyl(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The Weyl group order, computed from the orbit of the all-ones weight
    /// without materializing group elements.
    pub fn weyl_order(&self) -> Result<u64> {
        self.weyl_order
            .get_or_init(|| {
                let rho = self.rho();
                let mut seen: HashSet<Weight> = HashSet::new();
                let mut queue = VecDeque::new();
                seen.insert(rho.clone());
                queue.push_back(rho);
                while let Some(v) = queue.pop_front() {
                    if seen.len() as u64 > WEYL_ORDER_BOUND {
                        return Err(Error::WeylTooLarge {
                            bound: WEYL_ORDER_BOUND,
                        });
                    }
                    for i in 0..self.rank {
                        let r = self.simple_reflection(i, &v);
                        if seen.insert(r.clone()) {
                            queue.push_back(r);
                        }
                    }
                }
                Ok(seen.len() as u64)
            })
            .clone()
    }

    /// Dot action `w . lam = w(lam + rho) - rho`.
    pub fn dot_action(&self, w: &WeylElement, lam: &Weight) -> Weight {
        let rho = self.rho();
        w.apply(&lam.add(&rho)).sub(&rho)
    }

    /// `-w0(lam)` for the longest element `w0`: the highest weight of the
    /// dual of the irreducible with highest weight `lam`.
    pub fn dual_dominant(&self, lam: &Weight) -> Result<Weight> {
        self.check_rank(lam)?;
        if !self.is_dominant(lam) {
            return Err(Error::NotDominant {
                coords: lam.coords().to_vec(),
            });
        }
        let w0 = self.weyl_group()?.longest_element();
        Ok(w0.apply(lam).neg())
    }

    /// All vectors of the positive cone with height at most `bound`,
    /// sorted by (height, coordinates).
    pub fn pos_cone_up_to_height(&self, bound: i64) -> Vec<RootVector> {
        let mut out = Vec::new();
        let mut current = vec![0i64; self.rank];
        enumerate_bounded(&mut current, 0, bound, &mut out);
        out.sort_by_key(|v: &RootVector| (v.height(), v.coords().to_vec()));
        out
    }
}

fn enumerate_bounded(current: &mut Vec<i64>, idx: usize, remaining: i64, out: &mut Vec<RootVector>) {
    if idx == current.len() {
        out.push(RootVector::new(current.clone()));
        return;
    }
    for v in 0..=remaining {
        current[idx] = v;
        enumerate_bounded(current, idx + 1, remaining - v, out);
    }
    current[idx] = 0;
}

/// Closes the simple roots under simple reflections, keeping vectors with
/// nonnegative coordinates. Terminates within the bound exactly for finite
/// type.
fn positive_root_closure(cartan: &CartanMatrix) -> Result<Vec<RootVector>> {
    let n = cartan.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut b = vec![0i64; n];
        b[i] = 1;
        seen.insert(b.clone());
        queue.push_back(b);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            // s_i(beta) in root coordinates: subtract (A b)_i from slot i.
            let pairing: i64 = (0..n).map(|j| cartan.entry(i, j) * b[j]).sum();
            let mut r = b.clone();
            r[i] -= pairing;
            if r.iter().all(|&c| c >= 0) && seen.insert(r.clone()) {
                if seen.len() > ROOT_CLOSURE_BOUND {
                    return Err(Error::NotFiniteType {
                        bound: ROOT_CLOSURE_BOUND,
                    });
                }
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<RootVector> = seen.into_iter().map(RootVector::new).collect();
    roots.sort_by_key(|v| (v.height(), v.coords().to_vec()));
    Ok(roots)
}

/// Integer determinant by fraction-free elimination.
fn det_int(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Determinant and adjugate of the Cartan matrix, exact.
fn adjugate_and_det(cartan: &CartanMatrix) -> (i64, Vec<Vec<i64>>) {
    let n = cartan.rank();
    let full: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| cartan.entry(i, j) as i128).collect())
        .collect();
    let det = det_int(full.clone());
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // adj[j][i] = (-1)^{i+j} * minor deleting row i, column j.
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| full[r][c])
                        .collect::<Vec<_>>()
                })
                .collect();
            let cof = det_int(minor);
            let signed = if (i + j) % 2 == 0 { cof } else { -cof };
            adj[j][i] = i64::try_from(signed).expect("adjugate overflow");
        }
    }
    (i64::try_from(det).expect("determinant overflow"), adj)
}

/// Minimal positive integer symmetrizers: d[i] a[i][j] = d[j] a[j][i].
fn symmetrizers(cartan: &CartanMatrix) -> Result<Vec<i64>> {
    let n = cartan.rank();
    // Propagate exact ratios over the Dynkin graph, component by component.
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    let mut assigned = vec![false; n];
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        num[start] = 1;
        den[start] = 1;
        assigned[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut component = vec![start];
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || cartan.entry(i, j) == 0 {
                    continue;
                }
                // d_j / d_i = a[i][j] / a[j][i]; both entries are negative.
                let (rn, rd) = reduce(num[i] * cartan.entry(i, j), den[i] * cartan.entry(j, i));
                if assigned[j] {
                    if (num[j], den[j]) != (rn, rd) {
                        return Err(Error::internal("Cartan matrix is not symmetrizable"));
                    }
                } else {
                    num[j] = rn;
                    den[j] = rd;
                    assigned[j] = true;
                    component.push(j);
                    queue.push_back(j);
                }
            }
        }
        let lcm_den = component.iter().fold(1i64, |acc, &j| lcm(acc, den[j]));
        for &j in &component {
            num[j] *= lcm_den / den[j];
            den[j] = 1;
        }
        let gcd_num = component.iter().fold(0i64, |acc, &j| gcd(acc, num[j]));
        for &j in &component {
            num[j] /= gcd_num;
        }
    }
    if num.iter().any(|&d| d <= 0) {
        return Err(Error::internal("nonpositive symmetrizer"));
    }
    Ok(num)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn reduce(n: i64, d: i64) -> (i64, i64) {
    let g = gcd(n, d);
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    (n, d)
}

/// Breadth-first enumeration of the Weyl group by right multiplication with
/// simple reflections; the BFS depth is the Coxeter length.
fn enumerate_weyl(datum: &RootDatum) -> Result<WeylGroup> {
    let n = datum.rank();
    let order = datum.weyl_order()?;
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    // Column i of S_i is e_i - alpha_i (fundamental coordinates); the rest
    // is the identity.
    let generators: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            let mut m = identity.clone();
            for k in 0..n {
                m[k][i] -= datum.cartan.entry(k, i);
            }
            m
        })
        .collect();
    let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i][k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += aik * b[k][j];
                }
            }
        }
        out
    };
    let mut seen: HashMap<Vec<Vec<i64>>, ()> = HashMap::new();
    let mut elements = vec![WeylElement {
        matrix: identity.clone(),
        length: 0,
        word: vec![],
    }];
    seen.insert(identity, ());
    let mut frontier: Vec<usize> = vec![0];
    let mut length = 0u32;
    while !frontier.is_empty() {
        length += 1;
        let mut next = Vec::new();
        for &idx in &frontier {
            let (base_matrix, base_word) = {
                let e = &elements[idx];
                (e.matrix.clone(), e.word.clone())
            };
            for (i, gen) in generators.iter().enumerate() {
                let m = mul(&base_matrix, gen);
                if seen.contains_key(&m) {
                    continue;
                }
                seen.insert(m.clone(), ());
                if elements.len() as u64 >= order {
                    return Err(Error::internal("Weyl enumeration exceeded orbit order"));
                }
                let mut word = base_word.clone();
                word.push(i);
                next.push(elements.len());
                elements.push(WeylElement {
                    matrix: m,
                    length,
                    word,
                });
            }
        }
        frontier = next;
    }
    if elements.len() as u64 != order {
        return Err(Error::internal(format!(
            "Weyl enumeration found {} elements, orbit predicts {order}",
            elements.len()
        )));
    }
    elements.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
    let max_len = elements.last().expect("nonempty").length;
    if elements.iter().filter(|e| e.length == max_len).count() != 1 {
        return Err(Error::internal("longest element is not unique"));
    }
    Ok(WeylGroup { elements })
}
