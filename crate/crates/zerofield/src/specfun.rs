//! Integer-order Bessel/Neumann/Hankel functions and the few pieces of the
//! gamma function this crate needs. Self-contained: ascending power series
//! below the crossover argument, Miller backward recurrence (J) and
//! Neumann-type series (Y) above it.
//!
//! Everything is plain `f64`; no external special-function crates.

use num_complex::Complex64;
use thiserror::Error;

/// Euler's constant, embedded to full double precision.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Argument above which the ascending series hands off to the
/// backward-recurrence / Neumann-series evaluators.
pub const SERIES_CROSSOVER: f64 = 12.0;

/// Largest order accepted by the evaluators.
pub const MAX_ORDER: u32 = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("order {0} exceeds the supported cap of {MAX_ORDER}")]
    OrderCap(u32),
}

/// Truncation controls shared by every series evaluation in this module.
#[derive(Debug, Clone, Copy)]
pub struct SeriesControl {
    /// Stop when |term| < term_tol * |partial sum|.
    pub term_tol: f64,
    /// Hard cap on summed terms.
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            term_tol: 1e-16,
            max_terms: 60,
        }
    }
}

/// Bessel function of the first kind, integer order `n >= 0`, `x >= 0`.
pub fn bessel_j(n: u32, x: f64) -> Result<f64, SpecFunError> {
    if n > MAX_ORDER {
        return Err(SpecFunError::OrderCap(n));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(SpecFunError::Domain(format!(
            "bessel_j requires x >= 0, got {x}"
        )));
    }
    if x <= SERIES_CROSSOVER {
        Ok(j_ascending_series(n, x, &SeriesControl::default()))
    } else {
        Ok(j_backward_recurrence(n as usize, x)[n as usize])
    }
}

/// Bessel function of the second kind (Neumann function), order `n >= 0`, `x > 0`.
pub fn bessel_y(n: u32, x: f64) -> Result<f64, SpecFunError> {
    Ok(bessel_y_seq(n, x)?[n as usize])
}

/// Hankel function of the second kind: `H^(2)_n(x) = J_n(x) - i Y_n(x)`.
pub fn hankel2(n: u32, x: f64) -> Result<Complex64, SpecFunError> {
    let j = bessel_j(n, x)?;
    let y = bessel_y(n, x)?;
    Ok(Complex64::new(j, -y))
}

/// `J_0(x), ..., J_nmax(x)` in one pass.
pub fn bessel_j_seq(n_max: u32, x: f64) -> Result<Vec<f64>, SpecFunError> {
    if n_max > MAX_ORDER {
        return Err(SpecFunError::OrderCap(n_max));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(SpecFunError::Domain(format!(
            "bessel_j requires x >= 0, got {x}"
        )));
    }
    if x <= SERIES_CROSSOVER {
        let ctl = SeriesControl::default();
        Ok((0..=n_max).map(|n| j_ascending_series(n, x, &ctl)).collect())
    } else {
        let mut seq = j_backward_recurrence(n_max as usize, x);
        seq.truncate(n_max as usize + 1);
        Ok(seq)
    }
}

/// `Y_0(x), ..., Y_nmax(x)` in one pass. Forward recurrence in the order is
/// stable because |Y_n| grows with n.
pub fn bessel_y_seq(n_max: u32, x: f64) -> Result<Vec<f64>, SpecFunError> {
    if n_max > MAX_ORDER {
        return Err(SpecFunError::OrderCap(n_max));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(SpecFunError::Domain(format!(
            "bessel_y requires x > 0 (logarithmic singularity at 0), got {x}"
        )));
    }
    let (y0, y1) = if x <= SERIES_CROSSOVER {
        y01_ascending_series(x)
    } else {
        y01_neumann_series(x)
    };
    let len = n_max as usize + 1;
    let mut out = Vec::with_capacity(len.max(2));
    out.push(y0);
    out.push(y1);
    for m in 1..len.saturating_sub(1) {
        let next = (2.0 * m as f64 / x) * out[m] - out[m - 1];
        out.push(next);
    }
    out.truncate(len.max(1));
    Ok(out)
}

/// `H^(2)_0(x), ..., H^(2)_nmax(x)` in one pass.
pub fn hankel2_seq(n_max: u32, x: f64) -> Result<Vec<Complex64>, SpecFunError> {
    let js = bessel_j_seq(n_max, x)?;
    let ys = bessel_y_seq(n_max, x)?;
    Ok(js
        .iter()
        .zip(ys.iter())
        .map(|(&j, &y)| Complex64::new(j, -y))
        .collect())
}

/// Signed-order J via the reflection `J_{-n} = (-1)^n J_n`.
pub fn bessel_j_signed(n: i32, x: f64) -> Result<f64, SpecFunError> {
    let v = bessel_j(n.unsigned_abs(), x)?;
    Ok(if n < 0 && n % 2 != 0 { -v } else { v })
}

/// Signed-order H^(2) via the reflection `H^(2)_{-n} = (-1)^n H^(2)_n`.
pub fn hankel2_signed(n: i32, x: f64) -> Result<Complex64, SpecFunError> {
    let v = hankel2(n.unsigned_abs(), x)?;
    Ok(if n < 0 && n % 2 != 0 { -v } else { v })
}

/// Gamma function restricted to positive integer and half-integer arguments,
/// the only values the series in this crate ever need.
pub fn gamma(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(SpecFunError::Domain(format!(
            "gamma supports positive arguments only, got {x}"
        )));
    }
    let doubled = 2.0 * x;
    if (doubled - doubled.round()).abs() > 1e-12 || doubled.round() > 2.0 * (MAX_ORDER as f64 + 4.0)
    {
        return Err(SpecFunError::Domain(format!(
            "gamma supports integers and half-integers up to {}, got {x}",
            MAX_ORDER + 4
        )));
    }
    let two_x = doubled.round() as u64;
    if two_x % 2 == 0 {
        // integer argument: (x-1)!
        let mut acc = 1.0;
        for k in 2..(two_x / 2) {
            acc *= k as f64;
        }
        Ok(acc)
    } else {
        // half-integer: climb from Gamma(1/2) = sqrt(pi)
        let mut acc = std::f64::consts::PI.sqrt();
        let mut arg = 0.5;
        while arg + 1.0 <= x + 1e-12 {
            acc *= arg;
            arg += 1.0;
        }
        Ok(acc)
    }
}

/// Smallest positive root of `J_0`, located by bracketing bisection on this
/// module's own evaluator and polished with two Newton steps (`J_0' = -J_1`).
pub fn bessel_j0_first_zero() -> f64 {
    let f = |x: f64| bessel_j(0, x).expect("J_0 on (2,3) is in-domain");
    let (mut lo, mut hi) = (2.0_f64, 3.0_f64);
    debug_assert!(f(lo) > 0.0 && f(hi) < 0.0);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    let mut root = 0.5 * (lo + hi);
    for _ in 0..2 {
        let j0 = f(root);
        let j1 = bessel_j(1, root).expect("J_1 in-domain");
        root += j0 / j1; // Newton: x - J0/J0' with J0' = -J1
    }
    root
}

/// The two brace terms of the explicit order-one ascending expansion of
/// `H^(2)_1`: the curl-free `2i/(pi x)` singular term and the analytic
/// remainder built from the log-carrying series and the harmonic-number
/// correction series.
///
/// `singular + regular` reconstructs `H^(2)_1(x)`; full accuracy holds for
/// `x` up to [`SERIES_CROSSOVER`], where cancellation starts eating digits.
#[derive(Debug, Clone, Copy)]
pub struct Hankel2Order1Split {
    pub singular: Complex64,
    pub regular: Complex64,
}

pub fn hankel2_1_series_split(x: f64) -> Result<Hankel2Order1Split, SpecFunError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(SpecFunError::Domain(format!(
            "series split requires x > 0, got {x}"
        )));
    }
    let ctl = SeriesControl::default();
    let half = 0.5 * x;
    let half_sq = half * half;

    // sum_m (-1)^m / (m! Gamma(m+2)) (x/2)^(2m+1)  -- the J_1 series as printed
    let mut term = half / gamma(2.0)?;
    let mut sum_j = term;
    for m in 1..ctl.max_terms {
        term *= -half_sq / (m as f64);
        let gm = gamma(m as f64 + 2.0)? / gamma(m as f64 + 1.0)?;
        term /= gm;
        sum_j += term;
        if term.abs() < ctl.term_tol * sum_j.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }

    // sum_m (-1)^m / (m!(m+1)!) (x/2)^(2m+1) [h_m + h_{m+1}]
    let mut t = half;
    let mut h_m = 0.0;
    let mut h_m1 = 1.0;
    let mut sum_h = t * (h_m + h_m1);
    for m in 1..ctl.max_terms {
        t *= -half_sq / (m as f64 * (m as f64 + 1.0));
        h_m += 1.0 / m as f64;
        h_m1 += 1.0 / (m as f64 + 1.0);
        let term = t * (h_m + h_m1);
        sum_h += term;
        if term.abs() < ctl.term_tol * sum_h.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }

    let pi = std::f64::consts::PI;
    let log_coeff = Complex64::new(1.0, -2.0 / pi * (EULER_GAMMA + half.ln()));
    let regular = log_coeff * sum_j + Complex64::new(0.0, 1.0 / pi) * sum_h;
    let singular = Complex64::new(0.0, 2.0 / (pi * x));
    Ok(Hankel2Order1Split { singular, regular })
}

// ---------------------------------------------------------------------------
// evaluation kernels
// ---------------------------------------------------------------------------

fn j_ascending_series(n: u32, x: f64, ctl: &SeriesControl) -> f64 {
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * x;
    let half_sq = half * half;
    // leading term (x/2)^n / n!
    let mut term = 1.0;
    for k in 1..=n {
        term *= half / k as f64;
    }
    let mut sum = term;
    for m in 1..=ctl.max_terms {
        term *= -half_sq / (m as f64 * (m + n as usize) as f64);
        sum += term;
        if term.abs() < ctl.term_tol * sum.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    sum
}

/// Miller's backward recurrence. Returns `J_0..=J_upper` for `upper` large
/// enough to cover both the requested order and the Neumann-series tails.
fn j_backward_recurrence(n_max: usize, x: f64) -> Vec<f64> {
    let start = miller_start_order(n_max, x);
    let mut out = vec![0.0; start + 1];
    let mut jp = 0.0_f64;
    let mut j = 1e-30_f64;
    out[start] = j;
    for m in (1..=start).rev() {
        let jm = (2.0 * m as f64 / x) * j - jp;
        jp = j;
        j = jm;
        out[m - 1] = j;
        if j.abs() > 1e250 {
            jp *= 1e-250;
            j *= 1e-250;
            for v in out[m - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    // normalize with J_0 + 2 sum_k J_2k = 1
    let mut norm = out[0];
    let mut k = 2;
    while k <= start {
        norm += 2.0 * out[k];
        k += 2;
    }
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

fn miller_start_order(n_max: usize, x: f64) -> usize {
    let guess = x + 15.0 + 10.0 * x.cbrt() + n_max as f64;
    let mut m = guess.ceil() as usize;
    if m % 2 == 1 {
        m += 1;
    }
    m
}

/// `Y_0, Y_1` for small arguments from the standard log-carrying ascending
/// series.
fn y01_ascending_series(x: f64) -> (f64, f64) {
    let ctl = SeriesControl::default();
    let pi = std::f64::consts::PI;
    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    let half_sq = 0.25 * x * x;

    let j0 = j_ascending_series(0, x, &ctl);
    let j1 = j_ascending_series(1, x, &ctl);

    // Y0 = (2/pi) [ L J0 + sum_{m>=1} (-1)^{m+1} h_m / (m!)^2 (x/2)^{2m} ]
    let mut t = 1.0;
    let mut h = 0.0;
    let mut s0 = 0.0;
    let mut sign = 1.0;
    for m in 1..=ctl.max_terms {
        t *= half_sq / (m as f64 * m as f64);
        h += 1.0 / m as f64;
        s0 += sign * h * t;
        sign = -sign;
        if t * h < ctl.term_tol * s0.abs().max(1e-300) {
            break;
        }
    }
    let y0 = 2.0 / pi * (log_term * j0 + s0);

    // Y1 = (2/pi) L J1 - 2/(pi x) - (1/pi) sum (-1)^m (h_m + h_{m+1}) / (m!(m+1)!) (x/2)^{2m+1}
    let mut t = 0.5 * x;
    let mut h_m = 0.0;
    let mut h_m1 = 1.0;
    let mut s1 = t * (h_m + h_m1);
    let mut sign = -1.0;
    for m in 1..=ctl.max_terms {
        t *= half_sq / (m as f64 * (m as f64 + 1.0));
        h_m += 1.0 / m as f64;
        h_m1 += 1.0 / (m as f64 + 1.0);
        s1 += sign * (h_m + h_m1) * t;
        sign = -sign;
        if t * (h_m + h_m1) < ctl.term_tol * s1.abs().max(1e-300) {
            break;
        }
    }
    let y1 = 2.0 / pi * log_term * j1 - 2.0 / (pi * x) - s1 / pi;
    (y0, y1)
}

/// `Y_0, Y_1` for large arguments from Neumann-type series over the J
/// sequence produced by the backward recurrence:
///
///   Y_0 = (2/pi) [ L J_0 - 2 sum_{k>=1} (-1)^k J_2k / k ]
///   Y_1 = (2/pi) [ L J_1 - J_0/x - J_1
///                  + sum_{j>=2} (-1)^j (2j-1)/(j(j-1)) J_{2j-1} ]
///
/// with L = ln(x/2) + Euler's constant. Both reuse a single Miller pass.
fn y01_neumann_series(x: f64) -> (f64, f64) {
    let pi = std::f64::consts::PI;
    let js = j_backward_recurrence(0, x);
    let log_term = (0.5 * x).ln() + EULER_GAMMA;

    let mut s0 = 0.0;
    let mut sign = -1.0;
    let mut k = 1;
    while 2 * k < js.len() {
        s0 += sign * js[2 * k] / k as f64;
        sign = -sign;
        k += 1;
    }
    let y0 = 2.0 / pi * (log_term * js[0] - 2.0 * s0);

    let mut s1 = 0.0;
    let mut sign = 1.0;
    let mut j = 2;
    while 2 * j - 1 < js.len() {
        let jf = j as f64;
        s1 += sign * (2.0 * jf - 1.0) / (jf * (jf - 1.0)) * js[2 * j - 1];
        sign = -sign;
        j += 1;
    }
    let y1 = 2.0 / pi * (log_term * js[1] - js[0] / x - js[1] + s1);
    (y0, y1)
}
