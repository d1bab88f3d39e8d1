//! Log-domain number types.
//!
//! The derivative scaling sequences contain factors like `exp(a e^{w_n})`,
//! far outside f64 range, so every transform value travels as
//! (log-magnitude, sign/phase) and is only exponentiated when the caller
//! knows the result is representable.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Wrap a phase into (-pi, pi].
pub fn normalize_phase(p: f64) -> f64 {
    if !p.is_finite() {
        return p;
    }
    let mut r = p.rem_euclid(2.0 * PI); // [0, 2pi)
    if r > PI {
        r -= 2.0 * PI;
    }
    r
}

/// A real number stored as (ln|x|, sign). `sign == 0` encodes zero with
/// `log_abs = -inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedLogReal {
    pub log_abs: f64,
    pub sign: i8,
}

impl SignedLogReal {
    pub fn new(log_abs: f64, sign: i8) -> Self {
        debug_assert!(sign == -1 || sign == 0 || sign == 1);
        if sign == 0 {
            Self::zero()
        } else {
            Self { log_abs, sign }
        }
    }

    pub fn zero() -> Self {
        Self {
            log_abs: f64::NEG_INFINITY,
            sign: 0,
        }
    }

    pub fn from_value(x: f64) -> Self {
        if x == 0.0 {
            Self::zero()
        } else {
            Self {
                log_abs: x.abs().ln(),
                sign: if x > 0.0 { 1 } else { -1 },
            }
        }
    }

    /// Exponentiate; may under/overflow to 0 or +-inf.
    pub fn value(&self) -> f64 {
        self.sign as f64 * self.log_abs.exp()
    }

    pub fn scale_log(self, dlog: f64) -> Self {
        Self::new(self.log_abs + dlog, self.sign)
    }
}

impl From<SignedLogReal> for LogComplex {
    fn from(s: SignedLogReal) -> Self {
        let phase = if s.sign >= 0 { 0.0 } else { PI };
        LogComplex::new(s.log_abs, phase)
    }
}

/// A complex number stored as (ln|z|, arg z) with arg in (-pi, pi].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogComplex {
    pub log_abs: f64,
    pub phase: f64,
}

impl LogComplex {
    pub fn new(log_abs: f64, phase: f64) -> Self {
        Self {
            log_abs,
            phase: normalize_phase(phase),
        }
    }

    pub fn zero() -> Self {
        Self {
            log_abs: f64::NEG_INFINITY,
            phase: 0.0,
        }
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z == Complex64::new(0.0, 0.0) {
            Self::zero()
        } else {
            Self::new(z.norm().ln(), z.arg())
        }
    }

    /// Exponentiate; may under/overflow in magnitude.
    pub fn to_complex(&self) -> Complex64 {
        let r = self.log_abs.exp();
        Complex64::new(r * self.phase.cos(), r * self.phase.sin())
    }

    pub fn mul(self, other: Self) -> Self {
        Self::new(self.log_abs + other.log_abs, self.phase + other.phase)
    }

    pub fn div(self, other: Self) -> Self {
        Self::new(self.log_abs - other.log_abs, self.phase - other.phase)
    }

    pub fn scale_log(self, dlog: f64) -> Self {
        Self::new(self.log_abs + dlog, self.phase)
    }

    pub fn rotate(self, dphase: f64) -> Self {
        Self::new(self.log_abs, self.phase + dphase)
    }

    /// exp(self - other) as an ordinary complex number; the workhorse for
    /// comparing two log-domain values of similar magnitude.
    pub fn ratio(self, other: Self) -> Complex64 {
        let mag = (self.log_abs - other.log_abs).exp();
        let ph = self.phase - other.phase;
        Complex64::new(mag * ph.cos(), mag * ph.sin())
    }

    pub fn is_zero(&self) -> bool {
        self.log_abs == f64::NEG_INFINITY
    }
}

/// Sum of log-domain terms, scaled by the largest magnitude.
pub fn log_sum(terms: &[LogComplex]) -> LogComplex {
    let m = terms
        .iter()
        .map(|t| t.log_abs)
        .fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return LogComplex::zero();
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for t in terms {
        let r = (t.log_abs - m).exp();
        acc += Complex64::new(r * t.phase.cos(), r * t.phase.sin());
    }
    if acc == Complex64::new(0.0, 0.0) {
        return LogComplex::zero();
    }
    LogComplex::new(m + acc.norm().ln(), acc.arg())
}
