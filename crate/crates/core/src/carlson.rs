//! Carlson symmetric elliptic integrals.
//!
//! ```text
//! RF(x,y,z)   = ½ ∫₀^∞ dt / √((t+x)(t+y)(t+z))
//! RC(x,y)     = ½ ∫₀^∞ dt / ((t+y)√(t+x))
//! RJ(x,y,z,p) = 3/2 ∫₀^∞ dt / ((t+p)√((t+x)(t+y)(t+z)))
//! RD(x,y,z)   = RJ(x,y,z,z)
//! ```
//!
//! All four use the duplication theorem followed by a truncated Taylor
//! series in the normalized deviations (Carlson, Numer. Algorithms 10, 1995).
//! The stopping rule `4⁻ⁿ·Q < |Aₙ|` bounds the truncation error by the
//! relative tolerance [`RTOL`]. Principal values (negative `y` in RC,
//! negative `p` in RJ) are rejected.

use crate::error::{domain, Error, Result};

/// Target relative error of the series tail.
const RTOL: f64 = f64::EPSILON;

/// Hard cap on duplication steps. Well-scaled arguments need fewer than 30.
const MAX_ITER: usize = 200;

fn check_finite(args: &[f64]) -> Result<()> {
    if args.iter().any(|v| !v.is_finite()) {
        return domain("arguments must be finite");
    }
    Ok(())
}

fn check_xyz(x: f64, y: f64, z: f64) -> Result<()> {
    check_finite(&[x, y, z])?;
    if x < 0.0 || y < 0.0 || z < 0.0 {
        return domain(format!("negative argument in ({x}, {y}, {z})"));
    }
    let zeros = [x, y, z].iter().filter(|&&v| v == 0.0).count();
    if zeros > 1 {
        return domain(format!("more than one zero argument in ({x}, {y}, {z})"));
    }
    Ok(())
}

fn max_dev(mean: f64, args: &[f64]) -> f64 {
    args.iter().map(|v| (mean - v).abs()).fold(0.0, f64::max)
}

/// RF(x, y, z). At most one argument may be zero.
pub fn rf(x: f64, y: f64, z: f64) -> Result<f64> {
    check_xyz(x, y, z)?;
    rf_unchecked(x, y, z)
}

fn rf_unchecked(x0: f64, y0: f64, z0: f64) -> Result<f64> {
    let a0 = (x0 + y0 + z0) / 3.0;
    let mut q = (3.0 * RTOL).powf(-1.0 / 6.0) * max_dev(a0, &[x0, y0, z0]);
    let (mut x, mut y, mut z, mut a) = (x0, y0, z0, a0);
    let mut pow4 = 1.0;
    let mut n = 0;
    while q >= a.abs() {
        if n == MAX_ITER {
            return Err(Error::Convergence {
                routine: "rf",
                iterations: n,
            });
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        q *= 0.25;
        pow4 *= 4.0;
        n += 1;
    }
    let xd = (a0 - x0) / (pow4 * a);
    let yd = (a0 - y0) / (pow4 * a);
    let zd = -xd - yd;
    let e2 = xd * yd - zd * zd;
    let e3 = xd * yd * zd;
    let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
    Ok(series / a.sqrt())
}

/// RC(x, y) for x ≥ 0, y > 0. Equals RF(x, y, y).
pub fn rc(x: f64, y: f64) -> Result<f64> {
    check_finite(&[x, y])?;
    if x < 0.0 {
        return domain(format!("rc: x = {x} must be nonnegative"));
    }
    if y <= 0.0 {
        return domain(format!(
            "rc: y = {y} must be positive (principal value not supported)"
        ));
    }
    rc_unchecked(x, y)
}

fn rc_unchecked(x0: f64, y0: f64) -> Result<f64> {
    let a0 = (x0 + 2.0 * y0) / 3.0;
    let mut q = (3.0 * RTOL).powf(-1.0 / 8.0) * (a0 - x0).abs();
    let (mut x, mut y, mut a) = (x0, y0, a0);
    let mut pow4 = 1.0;
    let mut n = 0;
    while q >= a.abs() {
        if n == MAX_ITER {
            return Err(Error::Convergence {
                routine: "rc",
                iterations: n,
            });
        }
        let lambda = 2.0 * x.sqrt() * y.sqrt() + y;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        a = 0.25 * (a + lambda);
        q *= 0.25;
        pow4 *= 4.0;
        n += 1;
    }
    let s = (y0 - a0) / (pow4 * a);
    let s2 = s * s;
    let series = 1.0
        + s2 * (3.0 / 10.0
            + s * (1.0 / 7.0 + s * (3.0 / 8.0 + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * (9.0 / 8.0))))));
    Ok(series / a.sqrt())
}

/// RJ(x, y, z, p) for p > 0, at most one of x, y, z zero.
pub fn rj(x: f64, y: f64, z: f64, p: f64) -> Result<f64> {
    check_xyz(x, y, z)?;
    check_finite(&[p])?;
    if p <= 0.0 {
        return domain(format!(
            "rj: p = {p} must be positive (principal value not supported)"
        ));
    }
    rj_unchecked(x, y, z, p)
}

fn rj_unchecked(x0: f64, y0: f64, z0: f64, p0: f64) -> Result<f64> {
    let a0 = (x0 + y0 + z0 + 2.0 * p0) / 5.0;
    let delta = (p0 - x0) * (p0 - y0) * (p0 - z0);
    let mut q = (0.25 * RTOL).powf(-1.0 / 6.0) * max_dev(a0, &[x0, y0, z0, p0]);
    let (mut x, mut y, mut z, mut p, mut a) = (x0, y0, z0, p0, a0);
    let mut pow4 = 1.0;
    let mut sum = 0.0;
    let mut n = 0;
    while q >= a.abs() {
        if n == MAX_ITER {
            return Err(Error::Convergence {
                routine: "rj",
                iterations: n,
            });
        }
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = delta / (pow4 * pow4 * pow4 * d * d);
        sum += rc_unchecked(1.0, 1.0 + e)? / (pow4 * d);
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        p = 0.25 * (p + lambda);
        a = 0.25 * (a + lambda);
        q *= 0.25;
        pow4 *= 4.0;
        n += 1;
    }
    let xd = (a0 - x0) / (pow4 * a);
    let yd = (a0 - y0) / (pow4 * a);
    let zd = (a0 - z0) / (pow4 * a);
    let pd = -(xd + yd + zd) / 2.0;
    let e2 = xd * yd + xd * zd + yd * zd - 3.0 * pd * pd;
    let e3 = xd * yd * zd + 2.0 * e2 * pd + 4.0 * pd * pd * pd;
    let e4 = (2.0 * xd * yd * zd + e2 * pd + 3.0 * pd * pd * pd) * pd;
    let e5 = xd * yd * zd * pd * pd;
    Ok(tail(e2, e3, e4, e5) / (pow4 * a * a.sqrt()) + 6.0 * sum)
}

/// RD(x, y, z) = RJ(x, y, z, z); x and y may not both be zero, z > 0.
pub fn rd(x: f64, y: f64, z: f64) -> Result<f64> {
    check_xyz(x, y, z)?;
    if z <= 0.0 {
        return domain(format!("rd: z = {z} must be positive"));
    }
    let a0 = (x + y + 3.0 * z) / 5.0;
    let mut q = (0.25 * RTOL).powf(-1.0 / 6.0) * max_dev(a0, &[x, y, z]);
    let (x0, y0) = (x, y);
    let (mut x, mut y, mut z, mut a) = (x, y, z, a0);
    let mut pow4 = 1.0;
    let mut sum = 0.0;
    let mut n = 0;
    while q >= a.abs() {
        if n == MAX_ITER {
            return Err(Error::Convergence {
                routine: "rd",
                iterations: n,
            });
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        sum += 1.0 / (pow4 * sz * (z + lambda));
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        q *= 0.25;
        pow4 *= 4.0;
        n += 1;
    }
    let xd = (a0 - x0) / (pow4 * a);
    let yd = (a0 - y0) / (pow4 * a);
    let zd = -(xd + yd) / 3.0;
    let xy = xd * yd;
    let z2 = zd * zd;
    let e2 = xy - 6.0 * z2;
    let e3 = (3.0 * xy - 8.0 * z2) * zd;
    let e4 = 3.0 * (xy - z2) * z2;
    let e5 = xy * z2 * zd;
    Ok(tail(e2, e3, e4, e5) / (pow4 * a * a.sqrt()) + 3.0 * sum)
}

/// Series shared by RJ and RD.
fn tail(e2: f64, e3: f64, e4: f64, e5: f64) -> f64 {
    1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
}
