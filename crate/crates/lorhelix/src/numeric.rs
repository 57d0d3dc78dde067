//! Quadrature kernels shared by the reparameterization and synthesis paths.

/// Adaptive Simpson quadrature for a scalar integrand. Handles a > b by sign
/// flip. `abs_tol` bounds the absolute error of the whole interval.
pub(crate) fn adaptive_simpson<F>(f: &F, a: f64, b: f64, abs_tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    let [v] = adaptive_simpson_vec(&|s| [f(s)], a, b, abs_tol);
    v
}

/// Adaptive Simpson quadrature for a small fixed-size vector integrand, so
/// all components share one subdivision tree. The error estimate is the max
/// over components.
pub(crate) fn adaptive_simpson_vec<F, const N: usize>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
) -> [f64; N]
where
    F: Fn(f64) -> [f64; N],
{
    if a == b {
        return [0.0; N];
    }
    if a > b {
        let mut out = adaptive_simpson_vec(f, b, a, abs_tol);
        for v in out.iter_mut() {
            *v = -*v;
        }
        return out;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(&fa, &fm, &fb, b - a);
    recurse(f, a, b, &fa, &fm, &fb, &whole, abs_tol, 48)
}

fn simpson<const N: usize>(fa: &[f64; N], fm: &[f64; N], fb: &[f64; N], h: f64) -> [f64; N] {
    let mut out = [0.0; N];
    for i in 0..N {
        out[i] = h / 6.0 * (fa[i] + 4.0 * fm[i] + fb[i]);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn recurse<F, const N: usize>(
    f: &F,
    a: f64,
    b: f64,
    fa: &[f64; N],
    fm: &[f64; N],
    fb: &[f64; N],
    whole: &[f64; N],
    tol: f64,
    depth: u32,
) -> [f64; N]
where
    F: Fn(f64) -> [f64; N],
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, &flm, fm, m - a);
    let right = simpson(fm, &frm, fb, b - m);

    let mut err = 0.0f64;
    for i in 0..N {
        err = err.max((left[i] + right[i] - whole[i]).abs());
    }
    if depth == 0 || err <= 15.0 * tol {
        let mut out = [0.0; N];
        for i in 0..N {
            // Richardson extrapolation of the two Simpson levels.
            out[i] = left[i] + right[i] + (left[i] + right[i] - whole[i]) / 15.0;
        }
        return out;
    }
    let l = recurse(f, a, m, fa, &flm, fm, &left, 0.5 * tol, depth - 1);
    let r = recurse(f, m, b, fm, &frm, fb, &right, 0.5 * tol, depth - 1);
    let mut out = [0.0; N];
    for i in 0..N {
        out[i] = l[i] + r[i];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        let v = adaptive_simpson(&|x| x * x * x, 0.0, 2.0, 1e-12);
        assert!((v - 4.0).abs() < 1e-12);
    }

    #[test]
    fn integrates_oscillatory_integrands() {
        let v = adaptive_simpson(&f64::sin, 0.0, std::f64::consts::PI, 1e-12);
        assert!((v - 2.0).abs() < 1e-11);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let a = adaptive_simpson(&f64::exp, 0.0, 1.0, 1e-12);
        let b = adaptive_simpson(&f64::exp, 1.0, 0.0, 1e-12);
        assert!((a + b).abs() < 1e-13);
    }
}
