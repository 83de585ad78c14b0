//! Characters of irreducible representations and tensor decompositions,
//! in exact arbitrary-precision arithmetic.
//!
//! Weight multiplicities come from the Freudenthal recursion; the
//! alternating-sum route through the graded partition function lives in
//! [`crate::q_gradings`] and serves as an independent cross-check. Both are
//! kept fully separate so agreement between them is evidence, not
//! circularity.
//!
//! Multiplicity tables are memoized per `(datum fingerprint, highest
//! weight)` behind a mutex; concurrent fills are idempotent.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::root_datum::{RootDatum, RootVector, Weight};
use crate::Result;

/// A finite multiset of weights with arbitrary-precision multiplicities: a
/// torus character. Characters of full representations are Weyl-invariant;
/// the container does not enforce that, and the homomorphism-space
/// characters in [`crate::plucker`] genuinely are not.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Character {
    entries: BTreeMap<Weight, BigUint>,
}

impl Character {
    pub fn new() -> Self {
        Character::default()
    }

    pub fn from_entries(pairs: impl IntoIterator<Item = (Weight, BigUint)>) -> Self {
        let mut c = Character::new();
        for (w, m) in pairs {
            c.add(w, m);
        }
        c
    }

    pub fn add(&mut self, weight: Weight, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(weight).or_default() += mult;
    }

    pub fn multiplicity(&self, weight: &Weight) -> BigUint {
        self.entries.get(weight).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.entries.iter()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total dimension: the sum of all multiplicities.
    pub fn dimension(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// The character with every weight negated.
    pub fn negate_weights(&self) -> Character {
        Character {
            entries: self
                .entries
                .iter()
                .map(|(w, m)| (w.neg(), m.clone()))
                .collect(),
        }
    }

    /// Pointwise product of characters: the character of the tensor
    /// product.
    pub fn product(&self, other: &Character) -> Character {
        let mut out = Character::new();
        for (w1, m1) in self.entries() {
            for (w2, m2) in other.entries() {
                out.add(w1.add(w2), m1 * m2);
            }
        }
        out
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(w, m)| (w, m.to_string())))
            .finish()
    }
}

/// A decomposition into irreducibles: dominant highest weights with
/// positive multiplicities. Expanding every summand through
/// [`irr_character`] and adding reproduces the decomposed character
/// exactly; `tensor_decompose` verifies this before returning.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IrrDecomposition {
    entries: BTreeMap<Weight, BigUint>,
}

impl IrrDecomposition {
    pub fn entries(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.entries.iter()
    }

    pub fn multiplicity(&self, lam: &Weight) -> BigUint {
        self.entries.get(lam).cloned().unwrap_or_default()
    }

    pub fn summand_count(&self) -> usize {
        self.entries.len()
    }

    /// Re-expands the decomposition into a full character.
    pub fn expand(&self, datum: &RootDatum) -> Result<Character> {
        let mut out = Character::new();
        for (lam, mult) in self.entries() {
            let ch = irr_character(datum, lam)?;
            for (w, m) in ch.entries() {
                out.add(w.clone(), m * mult);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for IrrDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(w, m)| (w, m.to_string())))
            .finish()
    }
}

type DomTable = Arc<BTreeMap<Weight, BigUint>>;
type Memo<V> = OnceLock<Mutex<HashMap<(u64, Weight), V>>>;

/// Memoized dominant-weight multiplicity tables, keyed by
/// `(datum fingerprint, highest weight)`.
static DOM_TABLES: Memo<DomTable> = OnceLock::new();
/// Memoized full characters, same key.
static FULL_CHARS: Memo<Arc<Character>> = OnceLock::new();

fn require_dominant(datum: &RootDatum, lam: &Weight) -> Result<()> {
    datum.check_rank(lam)?;
    if !datum.is_dominant(lam) {
        return Err(Error::NotDominant {
            coords: lam.coords().to_vec(),
        });
    }
    Ok(())
}

/// Multiplicities of the dominant weights of the irreducible with highest
/// weight `lam`, computed by the Freudenthal recursion.
fn dominant_multiplicities(datum: &RootDatum, lam: &Weight) -> Result<DomTable> {
    require_dominant(datum, lam)?;
    let key = (datum.fingerprint(), lam.clone());
    {
        let tables = DOM_TABLES
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .expect("memo poisoned");
        if let Some(t) = tables.get(&key) {
            return Ok(Arc::clone(t));
        }
    }
    let table = Arc::new(freudenthal(datum, lam)?);
    let mut tables = DOM_TABLES
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .expect("memo poisoned");
    Ok(Arc::clone(tables.entry(key).or_insert(table)))
}

fn freudenthal(datum: &RootDatum, lam: &Weight) -> Result<BTreeMap<Weight, BigUint>> {
    let rho = datum.rho();
    // Depth of the weight diagram: the height of lam minus its lowest
    // weight, which equals the pairing with twice the dominant coweight
    // sum.
    let depth = datum.pairing_2rho(lam).max(0);
    let lam_plus_rho = lam.add(&rho);
    let norm_top = datum.scaled_form(&lam_plus_rho, &lam_plus_rho);

    // Dominant candidates lam - beta, beta in the positive cone, processed
    // by increasing height so every Freudenthal right-hand side only needs
    // multiplicities already computed.
    let mut mults: BTreeMap<Weight, BigUint> = BTreeMap::new();
    for beta in datum.pos_cone_up_to_height(depth) {
        let nu = lam.sub(&datum.root_to_weight(&beta));
        if !datum.is_dominant(&nu) {
            continue;
        }
        if beta.is_zero() {
            mults.insert(nu, BigUint::one());
            continue;
        }
        let nu_plus_rho = nu.add(&rho);
        let denominator = norm_top - datum.scaled_form(&nu_plus_rho, &nu_plus_rho);
        if denominator <= 0 {
            return Err(Error::internal(
                "Freudenthal denominator must be positive below the highest weight",
            ));
        }
        let mut numerator = BigInt::zero();
        for gamma in datum.positive_roots() {
            let gamma_w = datum.root_to_weight(gamma);
            let mut k = 1i64;
            loop {
                // nu + k gamma is a weight of the representation only while
                // lam - nu - k gamma stays in the positive cone.
                let residual: Vec<i64> = beta
                    .coords()
                    .iter()
                    .zip(gamma.coords())
                    .map(|(b, g)| b - k * g)
                    .collect();
                if residual.iter().any(|&c| c < 0) {
                    break;
                }
                let shifted = nu.add(&gamma_w.scale(k));
                let m = lookup_multiplicity(datum, &mults, &shifted);
                if !m.is_zero() {
                    let form = datum.scaled_form(&shifted, &gamma_w);
                    numerator += BigInt::from(m) * BigInt::from(form);
                }
                k += 1;
            }
        }
        numerator *= 2;
        let denominator = BigInt::from(denominator);
        let (q, r) = num_integer_div_rem(&numerator, &denominator);
        if !r.is_zero() {
            return Err(Error::internal(
                "Freudenthal recursion produced a non-integral multiplicity",
            ));
        }
        let mult = q
            .to_biguint()
            .ok_or_else(|| Error::internal("Freudenthal recursion produced a negative multiplicity"))?;
        if !mult.is_zero() {
            mults.insert(nu, mult);
        }
    }
    Ok(mults)
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

fn lookup_multiplicity(
    datum: &RootDatum,
    dominant: &BTreeMap<Weight, BigUint>,
    w: &Weight,
) -> BigUint {
    let rep = datum.dominant_representative(w);
    dominant.get(&rep).cloned().unwrap_or_default()
}

/// The full character of the irreducible representation with highest
/// weight `lam`.
pub fn irr_character(datum: &RootDatum, lam: &Weight) -> Result<Arc<Character>> {
    require_dominant(datum, lam)?;
    let key = (datum.fingerprint(), lam.clone());
    {
        let chars = FULL_CHARS
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .expect("memo poisoned");
        if let Some(c) = chars.get(&key) {
            return Ok(Arc::clone(c));
        }
    }
    let dom = dominant_multiplicities(datum, lam)?;
    let mut character = Character::new();
    for (nu, mult) in dom.iter() {
        for orbit_weight in weyl_orbit(datum, nu) {
            character.add(orbit_weight, mult.clone());
        }
    }
    let arc = Arc::new(character);
    let mut chars = FULL_CHARS
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .expect("memo poisoned");
    Ok(Arc::clone(chars.entry(key).or_insert(arc)))
}

/// The Weyl orbit of a weight, enumerated by reflection closure.
pub fn weyl_orbit(datum: &RootDatum, w: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        for i in 0..datum.rank() {
            let r = datum.simple_reflection(i, &v);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut orbit: Vec<Weight> = seen.into_iter().collect();
    orbit.sort();
    orbit
}

/// Multiplicity of the weight `nu` in the irreducible with highest weight
/// `lam`. Does not materialize the full character.
pub fn weight_multiplicity(datum: &RootDatum, lam: &Weight, nu: &Weight) -> Result<BigUint> {
    datum.check_rank(nu)?;
    let dom = dominant_multiplicities(datum, lam)?;
    Ok(lookup_multiplicity(datum, &dom, nu))
}

/// Dimension by the Weyl product formula, exact.
pub fn weyl_dimension(datum: &RootDatum, lam: &Weight) -> Result<BigUint> {
    require_dominant(datum, lam)?;
    let rho = datum.rho();
    let lam_plus_rho = lam.add(&rho);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for beta in datum.positive_roots() {
        num *= BigInt::from(datum.pairing_coroot(&lam_plus_rho, beta));
        den *= BigInt::from(datum.pairing_coroot(&rho, beta));
    }
    let (q, r) = num_integer_div_rem(&num, &den);
    if !r.is_zero() {
        return Err(Error::internal("Weyl dimension product is not integral"));
    }
    q.to_biguint()
        .ok_or_else(|| Error::internal("Weyl dimension is negative"))
}

/// Decomposes the tensor product of two irreducibles by repeatedly peeling
/// the maximal remaining weight, which must be dominant with positive
/// multiplicity at every step. The result is verified to re-expand to the
/// product character before it is returned.
pub fn tensor_decompose(
    datum: &RootDatum,
    lam1: &Weight,
    lam2: &Weight,
) -> Result<IrrDecomposition> {
    let ch1 = irr_character(datum, lam1)?;
    let ch2 = irr_character(datum, lam2)?;
    let product = ch1.product(&ch2);
    let top = lam1.add(lam2);

    // Remainder of the product, signed so a bookkeeping bug surfaces as a
    // negative coefficient instead of a wrong answer.
    let mut remainder: BTreeMap<Weight, BigInt> = product
        .entries()
        .map(|(w, m)| (w.clone(), BigInt::from(m.clone())))
        .collect();
    // Distance from the top weight orders the peeling; every support
    // weight of the product lies below the top in the positive cone.
    let mut height_index: HashMap<Weight, i64> = HashMap::new();
    let mut index_of = |w: &Weight, datum: &RootDatum| -> Result<i64> {
        if let Some(&h) = height_index.get(w) {
            return Ok(h);
        }
        let diff = top.sub(w);
        let h = datum
            .weight_to_root(&diff)
            .filter(RootVector::is_nonneg)
            .map(|b| b.height())
            .ok_or_else(|| {
                Error::internal("tensor product support escapes the cone below the top weight")
            })?;
        height_index.insert(w.clone(), h);
        Ok(h)
    };

    let mut decomposition: BTreeMap<Weight, BigUint> = BTreeMap::new();
    while !remainder.is_empty() {
        let mut best: Option<(i64, Weight)> = None;
        for w in remainder.keys() {
            let h = index_of(w, datum)?;
            let candidate = (h, w.clone());
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
        let (_, nu) = best.expect("nonempty remainder");
        if !datum.is_dominant(&nu) {
            return Err(Error::internal(
                "maximal weight of a tensor remainder must be dominant",
            ));
        }
        let mult = remainder.get(&nu).cloned().expect("selected from keys");
        let mult = mult
            .to_biguint()
            .ok_or_else(|| Error::internal("negative multiplicity while peeling"))?;
        let ch = irr_character(datum, &nu)?;
        for (w, m) in ch.entries() {
            let entry = remainder.entry(w.clone()).or_default();
            *entry -= BigInt::from(m * &mult);
            if entry.is_zero() {
                remainder.remove(w);
            } else if entry.sign() == num_bigint::Sign::Minus {
                return Err(Error::internal(
                    "tensor remainder went negative while peeling",
                ));
            }
        }
        decomposition.insert(nu, mult);
    }

    let result = IrrDecomposition {
        entries: decomposition,
    };
    if result.expand(datum)? != product {
        return Err(Error::internal(
            "tensor decomposition does not re-expand to the product character",
        ));
    }
    Ok(result)
}

/// Verdict of the deep-tensor comparison, with both sides kept as
/// witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCheck {
    pub lam: Weight,
    pub v_highest: Weight,
    pub pass: bool,
    /// Decomposition of the product, from [`tensor_decompose`].
    pub actual: IrrDecomposition,
    /// Reindexed weight multiplicities of the second factor: weight
    /// `lam + mu` with the multiplicity of `mu`.
    pub expected: IrrDecomposition,
}

/// Checks that for `lam` deep relative to `V`, the product
/// `V(lam) (x) V` decomposes as the direct sum over weights `mu` of `V` of
/// `V(lam + mu)` with multiplicity `dim V(mu)`.
///
/// Deep means `lam + mu` is dominant for every weight `mu` of `V`;
/// otherwise the check is refused with `NotDeepEnough` naming a witness.
pub fn stable_tensor_check(
    datum: &RootDatum,
    lam: &Weight,
    v_highest: &Weight,
) -> Result<TensorCheck> {
    require_dominant(datum, lam)?;
    let v_char = irr_character(datum, v_highest)?;
    let mut expected: BTreeMap<Weight, BigUint> = BTreeMap::new();
    for (mu, mult) in v_char.entries() {
        let shifted = lam.add(mu);
        if !datum.is_dominant(&shifted) {
            return Err(Error::NotDeepEnough {
                lam: lam.coords().to_vec(),
                witness: mu.coords().to_vec(),
            });
        }
        expected.insert(shifted, mult.clone());
    }
    let actual = tensor_decompose(datum, lam, v_highest)?;
    let expected = IrrDecomposition { entries: expected };
    Ok(TensorCheck {
        lam: lam.clone(),
        v_highest: v_highest.clone(),
        pass: actual == expected,
        actual,
        expected,
    })
}

/// Highest weight of the dual representation: `-w0(lam)`.
pub fn dual_character(datum: &RootDatum, lam: &Weight) -> Result<Weight> {
    datum.dual_dominant(lam)
}
