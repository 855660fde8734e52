//! Dedekind sums `s(q, p)`.
//!
//! Three evaluations are provided:
//!
//! * [`dedekind_sum`]: exact, `O(log p)` integer operations. The two-term
//!   reciprocity law `s(h,k) + s(k,h) = -1/4 + (h² + k² + 1)/(12hk)` is
//!   applied along the Euclidean remainder sequence and the resulting
//!   alternating sum is telescoped so that only integers are accumulated.
//! * [`dedekind_sum_bruteforce`]: exact, `O(p)`, straight from the sawtooth
//!   form `Σ ((j/p))((qj/p))`. This is the oracle for the fast path.
//! * [`dedekind_cotangent_float`]: the cotangent sum
//!   `(1/4p) Σ cot(πj/p) cot(πqj/p)` in `f64`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::arith::{check_pairwise_coprime, mod_inverse, ratio, Rational};
use crate::error::{Error, Result};

/// Largest modulus accepted by the `O(p)` evaluations.
pub const MAX_LINEAR_MODULUS: u64 = 1 << 40;

/// Reduces `q` into `[0, p)` and checks the pair is admissible.
fn reduce(q: &BigInt, p: &BigInt) -> Result<BigInt> {
    if !p.is_positive() {
        return Err(Error::NonPositive {
            what: "modulus",
            value: p.clone(),
        });
    }
    let h = q.mod_floor(p);
    let g = h.gcd(p);
    if !g.is_one() {
        return Err(Error::NonCoprime {
            a: q.clone(),
            n: p.clone(),
            gcd: g,
        });
    }
    Ok(h)
}

/// Returns `(num, den)` with `s(h, k) = num / den` for `0 <= h < k`,
/// `gcd(h, k) = 1`.
///
/// With remainders `r₀ = k, r₁ = h, rᵢ₊₁ = rᵢ₋₁ mod rᵢ` ending at `rₙ = 1`,
/// and quotients `aᵢ = ⌊rᵢ₋₁ / rᵢ⌋`,
///
/// `12 s(h,k) = (h + x₁)/k + Σ (-1)^(i+1) (aᵢ - 3)`
///
/// where `xₙ = 1`, `xᵢ = (1 - xᵢ₊₁ rᵢ₋₁) / rᵢ` (always an exact division;
/// `xᵢ` is an inverse of `rᵢ` modulo `rᵢ₋₁`).
fn reciprocity_sum<T>(h: T, k: T) -> (T, T)
where
    T: Integer + Signed + Clone + FromPrimitive,
{
    let three = T::from_u8(3).unwrap();
    let twelve = T::from_u8(12).unwrap();
    if k.is_one() {
        return (T::zero(), T::one());
    }

    let mut rems = vec![k.clone(), h.clone()];
    let mut alternating = T::zero();
    let mut plus = true;
    loop {
        let n = rems.len();
        let (a, r) = rems[n - 2].div_rem(&rems[n - 1]);
        let term = a - three.clone();
        alternating = if plus {
            alternating + term
        } else {
            alternating - term
        };
        plus = !plus;
        if r.is_zero() {
            break;
        }
        rems.push(r);
    }
    debug_assert!(rems.last().unwrap().is_one());

    // rems = [r₀, ..., rₙ]; walk x from xₙ down to x₁.
    let n = rems.len() - 1;
    let mut x = T::one();
    for i in (1..n).rev() {
        let num = T::one() - x * rems[i - 1].clone();
        debug_assert!((num.clone() % rems[i].clone()).is_zero());
        x = num / rems[i].clone();
    }

    let num = h + x + k.clone() * alternating;
    (num, twelve * k)
}

/// Exact Dedekind sum `s(q, p)`.
///
/// `q` is reduced modulo `p` first; `s(q, 1) = 0`.
pub fn dedekind_sum(q: &BigInt, p: &BigInt) -> Result<Rational> {
    let h = reduce(q, p)?;
    // Everything stays below ~p³ in magnitude, so i128 is safe well past 2⁴⁰.
    if p.bits() <= 40 {
        let (num, den) = reciprocity_sum(h.to_i128().unwrap(), p.to_i128().unwrap());
        return Ok(ratio(num, den));
    }
    let (num, den) = reciprocity_sum(h, p.clone());
    Ok(Rational::new(num, den))
}

/// Exact Dedekind sum by direct evaluation of the sawtooth sum.
///
/// `((x)) = x - ⌊x⌋ - 1/2` for non-integers, so with `kⱼ = qj mod p`
/// every term is `(2j - p)(2kⱼ - p) / 4p²`. Rejects `p` above
/// [`MAX_LINEAR_MODULUS`].
pub fn dedekind_sum_bruteforce(q: &BigInt, p: &BigInt) -> Result<Rational> {
    let h = reduce(q, p)?;
    let p_small = p
        .to_u64()
        .filter(|&v| v <= MAX_LINEAR_MODULUS)
        .ok_or_else(|| Error::OutOfRange {
            what: "modulus",
            value: p.clone(),
        })?;
    let h = h.to_u64().unwrap();
    Ok(ratio(
        sawtooth_sum_times_4p2(h, p_small),
        4 * i128::from(p_small) * i128::from(p_small),
    ))
}

fn sawtooth_sum_times_4p2(h: u64, p: u64) -> i128 {
    let pi = i128::from(p);
    let mut k = 0u64;
    let mut acc = 0i128;
    for j in 1..p {
        k += h;
        if k >= p {
            k -= p;
        }
        acc += (2 * i128::from(j) - pi) * (2 * i128::from(k) - pi);
    }
    acc
}

/// Table of `cot(πk/p)` for a fixed modulus, for evaluating the cotangent
/// form of `s(q, p)` at many `q`.
///
/// Entries satisfy `cot[p - k] = -cot[k]` bit-for-bit.
#[derive(Debug, Clone)]
pub struct CotangentTable {
    p: u64,
    cot: Vec<f64>,
}

impl CotangentTable {
    pub fn new(p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::NonPositive {
                what: "modulus",
                value: BigInt::zero(),
            });
        }
        if p > MAX_LINEAR_MODULUS {
            return Err(Error::OutOfRange {
                what: "modulus",
                value: BigInt::from(p),
            });
        }
        let mut cot = vec![0.0; p as usize];
        for k in 1..=p / 2 {
            let x = std::f64::consts::PI * (k as f64) / (p as f64);
            let c = x.cos() / x.sin();
            cot[k as usize] = c;
            cot[(p - k) as usize] = -c;
        }
        if p.is_multiple_of(2) {
            cot[(p / 2) as usize] = 0.0;
        }
        Ok(Self { p, cot })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// `(1/4p) Σ_{j=1}^{p-1} cot(πj/p) cot(πqj/p)`; `q` must already be
    /// reduced modulo `p` and coprime to it.
    ///
    /// Terms `j` and `p - j` coincide exactly (both factors flip sign), so
    /// only `j < p/2` is summed; the middle term for even `p` is zero.
    pub fn sum(&self, q: u64) -> f64 {
        let p = self.p;
        debug_assert!(q < p || p == 1);
        let half = ((p - 1) / 2) as usize;
        // Branch-free: the wrap is a coin flip, so a branch mispredicts half the time.
        let step = |k: u64, by: u64| {
            let t = k + by;
            t - p * u64::from(t >= p)
        };
        // Four interleaved lanes j ≡ 1, 2, 3, 4 (mod 4) break the add chain.
        let q4 = (4 * q) % p.max(1);
        let mut k = [0u64; 4];
        let mut cur = 0;
        for slot in &mut k {
            cur = step(cur, q);
            *slot = cur;
        }
        let mut acc = [0.0f64; 4];
        let mut j = 1;
        while j + 3 <= half {
            for lane in 0..4 {
                acc[lane] += self.cot[j + lane] * self.cot[k[lane] as usize];
                k[lane] = step(k[lane], q4);
            }
            j += 4;
        }
        let mut tail = 0.0;
        for (lane, jj) in (j..=half).enumerate() {
            tail += self.cot[jj] * self.cot[k[lane] as usize];
        }
        ((acc[0] + acc[1]) + (acc[2] + acc[3]) + tail) / (2.0 * p as f64)
    }
}

/// Floating evaluation of the cotangent form of `s(q, p)`.
pub fn dedekind_cotangent_float(q: &BigInt, p: &BigInt) -> Result<f64> {
    let h = reduce(q, p)?;
    let p_small = p.to_u64().ok_or_else(|| Error::OutOfRange {
        what: "modulus",
        value: p.clone(),
    })?;
    let table = CotangentTable::new(p_small)?;
    Ok(table.sum(h.to_u64().unwrap()))
}

/// `s(q⁻¹p, r) + s(p⁻¹r, q) + s(r⁻¹q, p)` minus its closed form
/// `-1/4 + (r/pq + q/pr + p/qr)/12`, where `a⁻¹b` in the sum over modulus
/// `n` means `(a⁻¹ mod n)·b`. Always zero for pairwise coprime inputs.
pub fn rademacher_residual(r: &BigInt, q: &BigInt, p: &BigInt) -> Result<Rational> {
    for (what, v) in [("r", r), ("q", q), ("p", p)] {
        if !v.is_positive() {
            return Err(Error::NonPositive {
                what,
                value: v.clone(),
            });
        }
    }
    check_pairwise_coprime(r, q, p)?;

    let term = |a: &BigInt, b: &BigInt, n: &BigInt| -> Result<Rational> {
        let rep = (mod_inverse(a, n)? * b).mod_floor(n);
        dedekind_sum(&rep, n)
    };
    let lhs = term(q, p, r)? + term(p, r, q)? + term(r, q, p)?;
    let rhs = ratio(-1, 4) + ratio(r * r + q * q + p * p, BigInt::from(12) * p * q * r);
    Ok(lhs - rhs)
}
