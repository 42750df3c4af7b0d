//! Finite fields `F_{p^d}` with table-driven arithmetic.
//!
//! Elements are opaque [`Fel`] handles interpreted by a [`FieldCtx`].  Prime
//! fields use residues directly, small extensions use Zech logarithms and
//! anything above `ZECH_LIMIT` falls back to polynomial arithmetic on packed
//! coefficient vectors.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly;

/// Largest field order accepted by [`make_field`].
pub const MAX_ORDER: u64 = 1 << 31;
const ZECH_LIMIT: u64 = 1 << 20;
const NONE: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field of order {p}^{d} exceeds the 2^31 budget")]
    TooLarge { p: u64, d: u32 },
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("no element of order {m} in a field of order {q}")]
    NoSuchOrder { m: u64, q: u64 },
    #[error("expected {expected} coefficients, got {got}")]
    BadCoeffs { expected: usize, got: usize },
}

/// A field element. Only meaningful together with the [`FieldCtx`] that made it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fel(pub(crate) u32);

impl fmt::Debug for Fel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fel({})", self.0)
    }
}

impl Fel {
    pub const ZERO: Fel = Fel(0);

    pub fn raw(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Prime,
    Zech,
    Packed,
}

struct Inner {
    p: u32,
    d: u32,
    q: u64,
    modulus: Vec<u32>,
    mode: Mode,
    // packed value of the least primitive element
    prim: u64,
    // Zech mode tables; exp[k] = packed(g^k), log[packed] = k
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    qm1_primes: Vec<u64>,
}

/// Immutable handle to `F_{p^d}`. Cloning is cheap.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<Inner>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p(), self.d())
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p() && self.d() == other.d()
    }
}
impl Eq for FieldCtx {}

/// Serialized field descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub d: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
    out.sort_unstable();
    out
}

static CACHE: OnceLock<Mutex<HashMap<(u64, u32), FieldCtx>>> = OnceLock::new();

/// The canonical `F_{p^d}`. Repeated calls return the same context.
pub fn make_field(p: u64, d: u32) -> Result<FieldCtx, GfError> {
    if d == 0 {
        return Err(GfError::ZeroDegree);
    }
    if !is_prime(p) {
        return Err(GfError::NonPrime(p));
    }
    let q = (p as u128).checked_pow(d).unwrap_or(u128::MAX);
    if q > MAX_ORDER as u128 {
        return Err(GfError::TooLarge { p, d });
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&(p, d)) {
        return Ok(f.clone());
    }
    let f = build(p, d, q as u64);
    cache.lock().unwrap().entry((p, d)).or_insert(f.clone());
    Ok(f)
}

fn build(p: u64, d: u32, q: u64) -> FieldCtx {
    let modulus = if d == 1 {
        Vec::new()
    } else {
        least_irreducible(p, d as usize)
            .into_iter()
            .map(|c| c as u32)
            .collect()
    };
    let mode = if d == 1 {
        Mode::Prime
    } else if q <= ZECH_LIMIT {
        Mode::Zech
    } else {
        Mode::Packed
    };
    let qm1_primes = prime_factors(q - 1);
    let mut inner = Inner {
        p: p as u32,
        d,
        q,
        modulus,
        mode,
        prim: 0,
        exp: Vec::new(),
        log: Vec::new(),
        zech: Vec::new(),
        qm1_primes,
    };
    inner.prim = (1..q)
        .find(|&v| {
            inner
                .qm1_primes
                .iter()
                .all(|r| slow_pow(&inner, v, (q - 1) / r) != 1)
        })
        .expect("multiplicative group is cyclic");
    if mode == Mode::Zech {
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![NONE; q as usize];
        let mut x = 1u64;
        for (k, e) in exp.iter_mut().enumerate() {
            *e = x as u32;
            log[x as usize] = k as u32;
            x = slow_mul(&inner, x, inner.prim);
        }
        let zech = exp
            .iter()
            .map(|&v| {
                let c0 = v as u64 % p;
                let w = v as u64 - c0 + (c0 + 1) % p;
                if w == 0 {
                    NONE
                } else {
                    log[w as usize]
                }
            })
            .collect();
        inner.exp = exp;
        inner.log = log;
        inner.zech = zech;
    }
    FieldCtx {
        inner: Arc::new(inner),
    }
}

/// Lexicographically least monic irreducible of degree `d`, compared on
/// `(c0, c1, ..)` with `c0` most significant. Leading coefficient included.
fn least_irreducible(p: u64, d: usize) -> Vec<u64> {
    let total = p.pow(d as u32);
    for k in 0..total {
        let mut f = vec![0u64; d + 1];
        let mut rest = k;
        for i in (0..d).rev() {
            f[i] = rest % p;
            rest /= p;
        }
        f[d] = 1;
        if f[0] != 0 && poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn unpack(inner: &Inner, mut v: u64) -> Vec<u64> {
    let p = inner.p as u64;
    let mut out = vec![0u64; inner.d as usize];
    for c in out.iter_mut() {
        *c = v % p;
        v /= p;
    }
    out
}

fn pack(inner: &Inner, c: &[u64]) -> u64 {
    let p = inner.p as u64;
    c.iter().rev().fold(0u64, |acc, &x| acc * p + x)
}

fn modulus_u64(inner: &Inner) -> Vec<u64> {
    inner.modulus.iter().map(|&c| c as u64).collect()
}

fn slow_mul(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p as u64;
    if inner.d == 1 {
        return a * b % p;
    }
    let prod = poly::mul(&unpack(inner, a), &unpack(inner, b), p);
    let mut r = poly::rem(&prod, &modulus_u64(inner), p);
    r.resize(inner.d as usize, 0);
    pack(inner, &r)
}

fn slow_add(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p as u64;
    let (x, y) = (unpack(inner, a), unpack(inner, b));
    let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
    pack(inner, &s)
}

fn slow_neg(inner: &Inner, a: u64) -> u64 {
    let p = inner.p as u64;
    let s: Vec<u64> = unpack(inner, a).iter().map(|&u| (p - u) % p).collect();
    pack(inner, &s)
}

fn slow_pow(inner: &Inner, a: u64, mut e: u64) -> u64 {
    let mut base = a;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(inner, acc, base);
        }
        base = slow_mul(inner, base, base);
        e >>= 1;
    }
    acc
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

impl FieldCtx {
    pub fn p(&self) -> u64 {
        self.inner.p as u64
    }

    pub fn d(&self) -> u32 {
        self.inner.d
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Monic modulus `[c0, .., cd]`; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p(),
            d: self.d(),
            modulus: self.inner.modulus.clone(),
        }
    }

    #[inline]
    pub fn zero(&self) -> Fel {
        Fel(0)
    }

    #[inline]
    pub fn one(&self) -> Fel {
        // 1 is the residue 1, the packed vector 1 and g^0 alike
        Fel(1)
    }

    /// Packed base-p integer `Σ c_i p^i` of the coefficient vector.
    pub fn to_packed(&self, x: Fel) -> u64 {
        match self.inner.mode {
            Mode::Prime | Mode::Packed => x.0 as u64,
            Mode::Zech => {
                if x.0 == 0 {
                    0
                } else {
                    self.inner.exp[(x.0 - 1) as usize] as u64
                }
            }
        }
    }

    /// Inverse of [`FieldCtx::to_packed`]; `v` is reduced modulo `q`.
    pub fn from_packed(&self, v: u64) -> Fel {
        let v = v % self.q();
        match self.inner.mode {
            Mode::Prime | Mode::Packed => Fel(v as u32),
            Mode::Zech => {
                if v == 0 {
                    Fel(0)
                } else {
                    Fel(self.inner.log[v as usize] + 1)
                }
            }
        }
    }

    pub fn coeffs(&self, x: Fel) -> Vec<u32> {
        unpack(&self.inner, self.to_packed(x))
            .into_iter()
            .map(|c| c as u32)
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u64]) -> Result<Fel, GfError> {
        if c.len() != self.d() as usize {
            return Err(GfError::BadCoeffs {
                expected: self.d() as usize,
                got: c.len(),
            });
        }
        let p = self.p();
        let red: Vec<u64> = c.iter().map(|x| x % p).collect();
        Ok(self.from_packed(pack(&self.inner, &red)))
    }

    pub fn from_int(&self, k: i64) -> Fel {
        let p = self.p() as i64;
        self.from_packed(k.rem_euclid(p) as u64)
    }

    /// All elements, in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Fel> + '_ {
        (0..self.q()).map(|v| self.from_packed(v))
    }

    #[inline]
    pub fn add(&self, a: Fel, b: Fel) -> Fel {
        let inner = &*self.inner;
        match inner.mode {
            Mode::Prime => {
                let s = a.0 + b.0;
                Fel(if s >= inner.p { s - inner.p } else { s })
            }
            Mode::Zech => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                let (i, j) = if a.0 <= b.0 {
                    (a.0 - 1, b.0 - 1)
                } else {
                    (b.0 - 1, a.0 - 1)
                };
                let z = inner.zech[(j - i) as usize];
                if z == NONE {
                    return Fel(0);
                }
                let qm1 = (inner.q - 1) as u32;
                let s = i + z;
                Fel(if s >= qm1 { s - qm1 } else { s } + 1)
            }
            Mode::Packed => Fel(slow_add(inner, a.0 as u64, b.0 as u64) as u32),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fel) -> Fel {
        let inner = &*self.inner;
        match inner.mode {
            Mode::Prime => Fel(if a.0 == 0 { 0 } else { inner.p - a.0 }),
            Mode::Zech => {
                if a.0 == 0 || inner.p == 2 {
                    return a;
                }
                let qm1 = (inner.q - 1) as u32;
                let s = a.0 - 1 + qm1 / 2;
                Fel(if s >= qm1 { s - qm1 } else { s } + 1)
            }
            Mode::Packed => Fel(slow_neg(inner, a.0 as u64) as u32),
        }
    }

    #[inline]
    pub fn sub(&self, a: Fel, b: Fel) -> Fel {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fel, b: Fel) -> Fel {
        let inner = &*self.inner;
        match inner.mode {
            Mode::Prime => Fel((a.0 as u64 * b.0 as u64 % inner.p as u64) as u32),
            Mode::Zech => {
                if a.0 == 0 || b.0 == 0 {
                    return Fel(0);
                }
                let qm1 = (inner.q - 1) as u32;
                let s = (a.0 - 1) + (b.0 - 1);
                Fel(if s >= qm1 { s - qm1 } else { s } + 1)
            }
            Mode::Packed => Fel(slow_mul(inner, a.0 as u64, b.0 as u64) as u32),
        }
    }

    /// Multiplicative inverse. Panics on zero; use [`FieldCtx::try_inv`] otherwise.
    pub fn inv(&self, a: Fel) -> Fel {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn try_inv(&self, a: Fel) -> Result<Fel, GfError> {
        if a.0 == 0 {
            return Err(GfError::ZeroElement);
        }
        Ok(self.pow(a, -1))
    }

    pub fn div(&self, a: Fel, b: Fel) -> Fel {
        self.mul(a, self.inv(b))
    }

    /// `a^e`; negative exponents need `a != 0`.
    pub fn pow(&self, a: Fel, e: i64) -> Fel {
        let inner = &*self.inner;
        let qm1 = inner.q - 1;
        if a.0 == 0 {
            assert!(e >= 0, "negative power of zero");
            return if e == 0 { self.one() } else { Fel(0) };
        }
        let e = e.rem_euclid(qm1 as i64) as u64;
        match inner.mode {
            Mode::Prime => Fel(mod_pow(a.0 as u64, e, inner.p as u64) as u32),
            Mode::Zech => {
                let l = (a.0 - 1) as u128 * e as u128 % qm1 as u128;
                Fel(l as u32 + 1)
            }
            Mode::Packed => Fel(slow_pow(inner, a.0 as u64, e) as u32),
        }
    }

    /// `x^(p^k)`; `k` may be negative.
    pub fn frobenius(&self, x: Fel, k: i64) -> Fel {
        let d = self.d() as i64;
        let k = k.rem_euclid(d) as u32;
        if k == 0 || x.0 == 0 {
            return x;
        }
        let qm1 = self.q() - 1;
        let e = mod_pow(self.p(), k as u64, qm1);
        self.pow(x, e as i64)
    }

    pub fn element_order(&self, x: Fel) -> Result<u64, GfError> {
        if x.0 == 0 {
            return Err(GfError::ZeroElement);
        }
        let mut ord = self.q() - 1;
        for &r in &self.inner.qm1_primes {
            while ord % r == 0 && self.pow(x, (ord / r) as i64) == self.one() {
                ord /= r;
            }
        }
        Ok(ord)
    }

    pub fn least_primitive(&self) -> Fel {
        self.from_packed(self.inner.prim)
    }

    /// `g^((q-1)/m)` for the least primitive `g`.
    pub fn find_element_of_order(&self, m: u64) -> Result<Fel, GfError> {
        let qm1 = self.q() - 1;
        if m == 0 || qm1 % m != 0 {
            return Err(GfError::NoSuchOrder { m, q: self.q() });
        }
        Ok(self.pow(self.least_primitive(), (qm1 / m) as i64))
    }

    /// Degree of the smallest subfield containing every element of `xs`.
    pub fn subfield_degree(&self, xs: &[Fel]) -> u32 {
        let d = self.d() as u64;
        for e in divisors(d) {
            if xs.iter().all(|&x| self.frobenius(x, e as i64) == x) {
                return e as u32;
            }
        }
        self.d()
    }

    /// `β != 1` and `β != -α^i` for `|i| <= n-1`.
    pub fn beta_is_admissible(&self, alpha: Fel, beta: Fel, n: usize) -> bool {
        if beta == self.one() {
            return false;
        }
        let n = n as i64;
        !(-(n - 1)..=(n - 1)).any(|i| beta == self.neg(self.pow(alpha, i)))
    }

    /// `x + x^{-1}`.
    pub fn plus_inverse(&self, x: Fel) -> Fel {
        self.add(x, self.inv(x))
    }

    /// The order-2 automorphism `x -> x^(p^(d/2))`, when `d` is even.
    pub fn epsilon(&self, x: Fel) -> Option<Fel> {
        if self.d() % 2 == 0 {
            Some(self.frobenius(x, self.d() as i64 / 2))
        } else {
            None
        }
    }

    /// Field element as its coefficient array, low degree first.
    pub fn show(&self, x: Fel) -> String {
        if self.d() == 1 {
            format!("{}", self.to_packed(x))
        } else {
            format!("{:?}", self.coeffs(x))
        }
    }
}

/// Coefficient arrays for a list of elements.
pub fn coeff_rows(f: &FieldCtx, xs: &[Fel]) -> Vec<Vec<u32>> {
    xs.iter().map(|&x| f.coeffs(x)).collect()
}
