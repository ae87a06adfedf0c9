//! The plethysm image `rho_n` of the characteristic map of induced
//! Gelfand-Graev characters, computed by four independent routes that must
//! agree exactly:
//!
//! 1. [`rho`] — the convolution recurrence
//!    `rho_n = (q^n - 1) h_n - rho_{n-1} h_1 - ... - rho_1 h_{n-1}`;
//! 2. [`rho_via_hl`] — the Hall-Littlewood form `q^n q_n(Y; q^{-1})`;
//! 3. [`rho_via_m`] — the monomial specialization
//!    `rho_n = sum_{lambda} m_lambda(q-1) h_lambda`;
//! 4. [`rho_via_theta`] — direct enumeration of degree-weighted orbit
//!    families with symbolic falling-factorial counts.
//!
//! Alongside: irreducible-polynomial counts over `F_q`, the coefficient-level
//! recurrence with its sign law, truncated generating-function identity
//! checks, the omega image, component products, and expansion of homogeneous
//! symmetric functions in the `{rho_lambda}` basis at a numeric `q`.

use crate::partition::{partitions_of, Partition};
use crate::ring::{factorial, rat, LaurentPoly, Rat, RingError};
use crate::symfunc::tables::solve_upper;
use crate::symfunc::{BasisTag, SymFunc};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Errors from the Gelfand-Graev layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GgError {
    /// A coefficient was requested for a partition of the wrong size.
    SizeMismatch {
        expected: u32,
        got: u32,
    },
    /// The rho-basis expansion needs a homogeneous input.
    NotHomogeneous,
    /// `q^k = 1` for some `1 <= k <= n`, so the change of basis is singular.
    DegenerateQ(Rat),
    Ring(RingError),
}

impl fmt::Display for GgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GgError::SizeMismatch { expected, got } => {
                write!(f, "partition size {got} does not match degree {expected}")
            }
            GgError::NotHomogeneous => write!(f, "input is not homogeneous"),
            GgError::DegenerateQ(q) => {
                write!(f, "q = {q} is degenerate (some q^k = 1 in range)")
            }
            GgError::Ring(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GgError {}

impl From<RingError> for GgError {
    fn from(e: RingError) -> Self {
        GgError::Ring(e)
    }
}

/// The Moebius function, by trial factorization.
fn moebius(n: u32) -> i64 {
    debug_assert!(n >= 1);
    let mut n = n;
    let mut primes = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The number of monic irreducible polynomials of degree `i` over `F_q`,
/// as a polynomial in `q`: `L_q(i) = (1/i) sum_{d|i} mu(d) q^{i/d}`.
pub fn count_irreducible(i: u32) -> LaurentPoly {
    assert!(i >= 1, "degree must be positive");
    let mut acc = LaurentPoly::zero();
    for d in 1..=i {
        if i.is_multiple_of(d) {
            let mu = moebius(d);
            if mu != 0 {
                acc = &acc + &LaurentPoly::monomial(i64::from(i / d), rat(mu));
            }
        }
    }
    acc.scale(&rat(i64::from(i)).recip())
}

/// The count restricted to polynomials with nonzero constant term:
/// `l_q(1) = L_q(1) - 1` (the polynomial `x` is excluded) and
/// `l_q(i) = L_q(i)` for `i >= 2`.
pub fn count_irreducible_nonzero_root(i: u32) -> LaurentPoly {
    let full = count_irreducible(i);
    if i == 1 {
        &full - &LaurentPoly::one()
    } else {
        full
    }
}

/// `rho_0, rho_1, ..., rho_n` in the `h` basis, by the recurrence
/// `rho_n = (q^n - 1) h_n - sum_{k=1}^{n-1} rho_{n-k} h_k` with `rho_0 = 1`.
pub fn rho_prefix(n: u32) -> Vec<SymFunc> {
    let mut rhos = vec![SymFunc::one(BasisTag::Complete)];
    for m in 1..=n {
        let mut acc = SymFunc::h(&[m]).scale(&LaurentPoly::q_pow_minus_one(m));
        for k in 1..m {
            acc = &acc - &(&rhos[(m - k) as usize] * &SymFunc::h(&[k]));
        }
        rhos.push(acc);
    }
    rhos
}

/// `rho_n` in the `h` basis, by the convolution recurrence.
pub fn rho(n: u32) -> SymFunc {
    rho_prefix(n).pop().unwrap()
}

/// The coefficient of `h_lambda` in `rho_n`, computed purely by the
/// coefficient-level recurrence: `[h_n] rho_n = q^n - 1` and, for longer
/// partitions, minus the sum over distinct part values of the coefficient at
/// the partition with one copy of that value removed.
pub fn rho_coeff(n: u32, lam: &Partition) -> Result<LaurentPoly, GgError> {
    if lam.size() != n {
        return Err(GgError::SizeMismatch {
            expected: n,
            got: lam.size(),
        });
    }
    let mut memo: HashMap<Partition, LaurentPoly> = HashMap::new();
    fn go(lam: &Partition, memo: &mut HashMap<Partition, LaurentPoly>) -> LaurentPoly {
        if lam.is_empty() {
            return LaurentPoly::one();
        }
        if lam.len() == 1 {
            return LaurentPoly::q_pow_minus_one(lam.parts()[0]);
        }
        if let Some(hit) = memo.get(lam) {
            return hit.clone();
        }
        let mut acc = LaurentPoly::zero();
        for &value in lam.multiplicities().keys() {
            acc = &acc - &go(&lam.remove_one(value), memo);
        }
        memo.insert(lam.clone(), acc.clone());
        acc
    }
    Ok(go(lam, &mut memo))
}

/// `rho_n` via the one-row Hall-Littlewood generating function:
/// `rho_n = q^n q_n(Y; q^{-1})`, which avoids any division.
pub fn rho_via_hl(n: u32) -> SymFunc {
    if n == 0 {
        return SymFunc::one(BasisTag::Complete);
    }
    let qn = crate::hall_littlewood::qr_symfunc(n, &crate::hall_littlewood::HLParam::q_inverse());
    qn.scale(&LaurentPoly::q_pow(i64::from(n)))
}

/// `rho_n = sum_{lambda} m_lambda(q-1) h_lambda`, where `m_lambda(q-1)` is
/// the monomial symmetric function specialized through its power-sum
/// expansion with `p_k = q^k - 1`.
pub fn rho_via_m(n: u32) -> SymFunc {
    let assign: BTreeMap<u32, LaurentPoly> = (1..=n)
        .map(|k| (k, LaurentPoly::q_pow_minus_one(k)))
        .collect();
    SymFunc::from_terms(
        BasisTag::Complete,
        partitions_of(n).into_iter().map(|lam| {
            let value = SymFunc::basis_element(BasisTag::Monomial, lam.clone())
                .specialize_p(&assign)
                .expect("assignment covers all indices up to n");
            (lam, value)
        }),
    )
}

/// Enumerates all assignments `m: weights -> N` with
/// `sum_k m[k] * weights[k] = target`.
fn weighted_families<F: FnMut(&[u32])>(weights: &[u32], target: u32, visit: &mut F) {
    fn rec<F: FnMut(&[u32])>(
        weights: &[u32],
        idx: usize,
        remaining: u32,
        acc: &mut Vec<u32>,
        visit: &mut F,
    ) {
        if idx == weights.len() {
            if remaining == 0 {
                visit(acc);
            }
            return;
        }
        for m in 0..=remaining / weights[idx] {
            acc.push(m);
            rec(weights, idx + 1, remaining - m * weights[idx], acc, visit);
            acc.pop();
        }
    }
    rec(weights, 0, target, &mut Vec::new(), visit);
}

/// `rho_n` by direct enumeration of the orbit-indexed expansion: families
/// `{m_{i,j} >= 0}` with `sum m_{i,j} * i * j = n` contribute, for each
/// variable degree `i` with total multiplicity `m_i = sum_j m_{i,j}`, the
/// symbolic count `binom(l_q(i), m_i) * m_i! / prod_j m_{i,j}!` times the
/// plethysm product `prod_j (h_j[p_i])^{m_{i,j}}`.
pub fn rho_via_theta(n: u32) -> SymFunc {
    let pairs: Vec<(u32, u32)> = (1..=n)
        .flat_map(|i| (1..=n / i).map(move |j| (i, j)))
        .collect();
    let weights: Vec<u32> = pairs.iter().map(|&(i, j)| i * j).collect();

    // h_j in the power-sum basis with indices scaled by i
    let pleth: Vec<SymFunc> = pairs
        .iter()
        .map(|&(i, j)| SymFunc::h(&[j]).convert(BasisTag::PowerSum).plethysm_pb(i))
        .collect();
    let counts: Vec<LaurentPoly> = (1..=n).map(count_irreducible_nonzero_root).collect();

    let mut total = SymFunc::zero(BasisTag::PowerSum);
    weighted_families(&weights, n, &mut |family| {
        let mut sym = SymFunc::one(BasisTag::PowerSum);
        let mut count = LaurentPoly::one();
        let mut idx = 0;
        while idx < pairs.len() {
            let i = pairs[idx].0;
            let mut block_end = idx;
            while block_end < pairs.len() && pairs[block_end].0 == i {
                block_end += 1;
            }
            let block = &family[idx..block_end];
            let m_i: u32 = block.iter().sum();
            if m_i > 0 {
                let mut multinomial = factorial(u64::from(m_i));
                for &m in block {
                    multinomial /= factorial(u64::from(m));
                }
                count = &count
                    * &counts[(i - 1) as usize]
                        .falling_binomial(m_i)
                        .scale(&multinomial);
                for (&m, f) in block.iter().zip(&pleth[idx..block_end]) {
                    for _ in 0..m {
                        sym = &sym * f;
                    }
                }
            }
            idx = block_end;
        }
        total = &total + &sym.scale(&count);
    });
    total.convert(BasisTag::Complete)
}

/// Checks the convolution identity
/// `rho_0 h_n + rho_1 h_{n-1} + ... + rho_n h_0 = q^n h_n` exactly.
pub fn verify_convolution(n: u32) -> bool {
    let rhos = rho_prefix(n);
    let mut acc = SymFunc::zero(BasisTag::Complete);
    for (k, rho_k) in rhos.iter().enumerate() {
        let rest = n - k as u32;
        let h = if rest == 0 {
            SymFunc::one(BasisTag::Complete)
        } else {
            SymFunc::h(&[rest])
        };
        acc = &acc + &(rho_k * &h);
    }
    acc == SymFunc::h(&[n]).scale(&LaurentPoly::q_pow(i64::from(n)))
}

/// Checks the Moebius product identity abstractly: the `t^n` coefficient of
/// `prod_{i,j} (1 - y_j^i t^i)^{L_q(i)}`, expanded over families of signed
/// elementary plethysms `(-1)^a e_a[p_i]` with symbolic falling binomials of
/// `L_q(i)`, must equal `(-q)^n e_n`.
pub fn verify_moebius_product(n: u32) -> bool {
    assert!(n >= 1);
    let pairs: Vec<(u32, u32)> = (1..=n)
        .flat_map(|i| (1..=n / i).map(move |a| (i, a)))
        .collect();
    let weights: Vec<u32> = pairs.iter().map(|&(i, a)| i * a).collect();
    let pleth: Vec<SymFunc> = pairs
        .iter()
        .map(|&(i, a)| {
            let e_a = SymFunc::e(&[a]).convert(BasisTag::PowerSum).plethysm_pb(i);
            if a % 2 == 1 {
                -e_a
            } else {
                e_a
            }
        })
        .collect();
    let counts: Vec<LaurentPoly> = (1..=n).map(count_irreducible).collect();

    let mut total = SymFunc::zero(BasisTag::PowerSum);
    weighted_families(&weights, n, &mut |family| {
        let mut sym = SymFunc::one(BasisTag::PowerSum);
        let mut count = LaurentPoly::one();
        let mut idx = 0;
        while idx < pairs.len() {
            let i = pairs[idx].0;
            let mut block_end = idx;
            while block_end < pairs.len() && pairs[block_end].0 == i {
                block_end += 1;
            }
            let block = &family[idx..block_end];
            let m_i: u32 = block.iter().sum();
            if m_i > 0 {
                let mut multinomial = factorial(u64::from(m_i));
                for &m in block {
                    multinomial /= factorial(u64::from(m));
                }
                count = &count
                    * &counts[(i - 1) as usize]
                        .falling_binomial(m_i)
                        .scale(&multinomial);
                for (&m, f) in block.iter().zip(&pleth[idx..block_end]) {
                    for _ in 0..m {
                        sym = &sym * f;
                    }
                }
            }
            idx = block_end;
        }
        total = &total + &sym.scale(&count);
    });

    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let rhs = SymFunc::e(&[n])
        .convert(BasisTag::PowerSum)
        .scale(&LaurentPoly::monomial(i64::from(n), rat(sign)));
    total == rhs
}

/// The omega image of `rho_n`: the characteristic of the induced character
/// expressed over the conjugacy-class alphabet.
pub fn omega_rho(n: u32) -> SymFunc {
    rho(n).omega()
}

/// Checks that all four computation routes agree exactly at degree `n`.
pub fn verify_four_way(n: u32) -> bool {
    let reference = rho(n);
    rho_via_hl(n) == reference && rho_via_m(n) == reference && rho_via_theta(n) == reference
}

/// Checks the sign/divisibility law at degree `n`: for every partition
/// `lambda` of `n`, `(-1)^{l(lambda)-1} [h_lambda] rho_n` is `(q-1)` times a
/// polynomial with nonnegative integer coefficients.
pub fn verify_sign_law(n: u32) -> bool {
    let q_minus_1 = LaurentPoly::q_pow_minus_one(1);
    partitions_of(n).iter().all(|lam| {
        let coeff = rho_coeff(n, lam).expect("size matches by construction");
        let signed = if lam.len() % 2 == 0 { -&coeff } else { coeff };
        match signed.exact_div(&q_minus_1) {
            Ok(reduced) => reduced
                .terms()
                .all(|(k, c)| k >= 0 && c.is_integer() && !c.is_negative()),
            Err(_) => false,
        }
    })
}

/// One entry of the identity-verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub n: u32,
    pub pass: bool,
}

/// Runs the full identity suite up to `max_n`: four-way agreement at each
/// `0 <= n <= max_n` (degree 0 checks `rho_0 = 1` across routes), and the
/// convolution, Moebius-product, and sign/divisibility identities at each
/// `1 <= n <= max_n`.
pub fn verify_suite(max_n: u32) -> Vec<IdentityCheck> {
    let mut report = Vec::new();
    for n in 0..=max_n {
        report.push(IdentityCheck {
            identity: "four-way-agreement",
            n,
            pass: verify_four_way(n),
        });
    }
    for n in 1..=max_n {
        report.push(IdentityCheck {
            identity: "convolution",
            n,
            pass: verify_convolution(n),
        });
    }
    for n in 1..=max_n {
        report.push(IdentityCheck {
            identity: "moebius-product",
            n,
            pass: verify_moebius_product(n),
        });
    }
    for n in 1..=max_n {
        report.push(IdentityCheck {
            identity: "sign-law",
            n,
            pass: verify_sign_law(n),
        });
    }
    report
}

/// The symbolic combination `sum C_lambda rho_lambda` in the `h` basis.
pub fn rho_combination(terms: &[(Partition, Rat)]) -> SymFunc {
    let mut acc = SymFunc::zero(BasisTag::Complete);
    for (lam, c) in terms {
        acc = &acc + &product_rho(lam.parts()).scale_rat(c);
    }
    acc
}

/// `prod_i rho_{n_i}`, the characteristic image of a linear supercharacter
/// with connected components of sizes `components`. Empty input gives 1.
pub fn product_rho(components: &[u32]) -> SymFunc {
    assert!(
        components.iter().all(|&c| c > 0),
        "component sizes must be positive"
    );
    let max = components.iter().copied().max().unwrap_or(0);
    let rhos = rho_prefix(max);
    let mut acc = SymFunc::one(BasisTag::Complete);
    for &c in components {
        acc = &acc * &rhos[c as usize];
    }
    acc
}

/// Coefficients of a class function in the `{rho_lambda}` basis at a fixed
/// numeric `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoExpansion {
    q_value: Rat,
    coeffs: BTreeMap<Partition, Rat>,
}

impl RhoExpansion {
    /// Panics unless all keys share one size (the expansion is homogeneous).
    pub fn new(q_value: Rat, coeffs: BTreeMap<Partition, Rat>) -> Self {
        let coeffs: BTreeMap<Partition, Rat> =
            coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut sizes = coeffs.keys().map(Partition::size);
        if let Some(first) = sizes.next() {
            assert!(
                sizes.all(|s| s == first),
                "rho expansion keys must share one degree"
            );
        }
        RhoExpansion { q_value, coeffs }
    }

    pub fn q_value(&self) -> &Rat {
        &self.q_value
    }

    /// Coefficients in canonical partition order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &Rat)> + '_ {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> Rat {
        self.coeffs.get(lam).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `sum_lambda C_lambda`, the dimension of the underlying character.
    pub fn dim_sum(&self) -> Rat {
        self.coeffs.values().sum()
    }

    /// `sum_lambda C_lambda rho_lambda` evaluated at the stored `q`, in the
    /// `h` basis with constant coefficients.
    pub fn reconstruct(&self) -> SymFunc {
        let mut acc = SymFunc::zero(BasisTag::Complete);
        for (lam, c) in &self.coeffs {
            let rho_lam = eval_product_rho(lam, &self.q_value);
            let term = SymFunc::from_terms(
                BasisTag::Complete,
                rho_lam
                    .into_iter()
                    .map(|(mu, v)| (mu, LaurentPoly::constant(v * c))),
            );
            acc = &acc + &term;
        }
        acc
    }
}

/// h-expansion of `rho_lambda = prod_i rho_{lambda_i}` with coefficients
/// evaluated at `q`.
fn eval_product_rho(lam: &Partition, q: &Rat) -> BTreeMap<Partition, Rat> {
    let max = lam.parts().first().copied().unwrap_or(0);
    let rhos = rho_prefix(max);
    let evaluated: Vec<BTreeMap<Partition, Rat>> = rhos
        .iter()
        .map(|r| {
            r.terms()
                .map(|(mu, c)| {
                    (
                        mu.clone(),
                        c.eval(q).expect("rho coefficients are polynomial"),
                    )
                })
                .collect()
        })
        .collect();
    let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
    acc.insert(Partition::empty(), Rat::one());
    for &part in lam.parts() {
        let mut next: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (la, ca) in &acc {
            for (lb, cb) in &evaluated[part as usize] {
                let key = la.concat_sort(lb);
                let v = ca * cb;
                let entry = next.entry(key).or_insert_with(Rat::zero);
                *entry += v;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// Expands a homogeneous symmetric function in the `{rho_lambda}` basis at
/// the numeric `q_value`, by solving the change-of-basis system that is
/// triangular with respect to partition refinement.
///
/// Fails with [`GgError::DegenerateQ`] when `q_value^k = 1` for some
/// `1 <= k <= n` (a diagonal entry `prod_i (q^{lambda_i} - 1)` would vanish)
/// and with [`GgError::NotHomogeneous`] on mixed-degree input.
pub fn to_rho_basis(f: &SymFunc, q_value: &Rat) -> Result<RhoExpansion, GgError> {
    let h_form = f.convert(BasisTag::Complete);
    if h_form.is_zero() {
        return Ok(RhoExpansion::new(q_value.clone(), BTreeMap::new()));
    }
    let n = h_form.homogeneous_degree().ok_or(GgError::NotHomogeneous)?;
    for k in 1..=n {
        if q_value.pow(k as i32).is_one() {
            return Err(GgError::DegenerateQ(q_value.clone()));
        }
    }

    let parts = partitions_of(n);
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut target = vec![Rat::zero(); parts.len()];
    for (lam, c) in h_form.terms() {
        target[index[lam]] = c.eval(q_value)?;
    }

    // rows[lambda] = h-expansion of rho_lambda at q_value; supported on
    // refinements of lambda, which makes the system triangular in the
    // canonical (reverse-lexicographic) order.
    let mut rows = vec![vec![Rat::zero(); parts.len()]; parts.len()];
    for (r, lam) in parts.iter().enumerate() {
        for (mu, v) in eval_product_rho(lam, q_value) {
            assert!(
                mu.refines(lam),
                "rho_{lam} expansion escaped the refinement support at {mu}"
            );
            rows[r][index[&mu]] = v;
        }
        assert!(
            !rows[r][r].is_zero(),
            "vanishing diagonal for rho_{lam} despite nondegenerate q"
        );
    }

    let solved = solve_upper(&rows, &target);
    Ok(RhoExpansion::new(
        q_value.clone(),
        parts.into_iter().zip(solved).collect(),
    ))
}
