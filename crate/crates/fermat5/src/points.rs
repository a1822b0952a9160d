//! Numeric approximations of the six real intersection points, derived from
//! exact isolating intervals: midpoints, residuals in both curve equations,
//! and a rigorous error bound.  CSV and SVG renderings live here too; only
//! the SVG converts to floating point, and only for display.

use crate::params::{in_totally_real_range, ParamData, QuinticError};
use crate::poly::PolyQ;
use crate::rational::Rational;
use crate::realroots::{isolate_real_roots, refine};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// One real intersection point, reported exactly: the isolating interval,
/// its midpoint pair, residuals of both defining equations at the pair, and
/// a bound valid for any point of the interval.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericPoint {
    pub root_index: usize,
    pub x_lo: Rational,
    pub x_hi: Rational,
    pub x_mid: Rational,
    pub y_mid: Rational,
    pub fermat_residual: Rational,
    pub conic_residual: Rational,
    pub error_bound: Rational,
}

fn abs_derivative_bound(p: &PolyQ, radius: &Rational) -> Rational {
    let deriv = p.derivative();
    let mut power = Rational::one();
    let mut bound = Rational::zero();
    for c in deriv.coeffs() {
        bound += c.abs() * &power;
        power *= radius;
    }
    bound
}

/// Approximates the six real points for a parameter in the totally real
/// window: each x is the midpoint of an isolating interval refined to the
/// requested width, and y applies the exact root map to it.
pub fn numeric_points(
    pd: &ParamData,
    precision: &Rational,
) -> Result<Vec<NumericPoint>, QuinticError> {
    if !in_totally_real_range(&pd.t) {
        return Err(QuinticError::NotTotallyReal);
    }
    assert!(precision.is_positive(), "precision must be positive");
    let a_poly = PolyQ::new(pd.a.to_vec());
    let fermat_along = {
        let x5 = PolyQ::monomial(5, Rational::one());
        &(&x5 + &a_poly.pow(5)) + &PolyQ::one()
    };
    let conic_along = {
        let x = PolyQ::x();
        let t = &pd.t;
        let quadratic = &(&PolyQ::monomial(2, Rational::one()) + &(&a_poly * &a_poly))
            + &PolyQ::one();
        let mixed = &(&(&x * &a_poly) + &x) + &a_poly;
        &quadratic + &mixed.scale(t)
    };
    debug_assert!(fermat_along.divmod(&pd.f_t).expect("f nonzero").1.is_zero());
    debug_assert!(conic_along.divmod(&pd.f_t).expect("f nonzero").1.is_zero());

    let intervals = isolate_real_roots(&pd.f_t)?;
    assert_eq!(intervals.len(), 6, "window parameters have six real roots");
    let mut out = Vec::with_capacity(6);
    for (root_index, interval) in intervals.into_iter().enumerate() {
        let refined = refine(&interval, precision);
        let x_lo = refined.lo().clone();
        let x_hi = refined.hi().clone();
        let x_mid = refined.midpoint();
        let y_mid = a_poly.eval(&x_mid);
        let fermat_residual = fermat_along.eval(&x_mid).abs();
        let conic_residual = conic_along.eval(&x_mid).abs();
        let radius = x_lo.abs().max(x_hi.abs());
        let half_width = refined.width() / (Rational::one() + Rational::one());
        let fermat_bound = abs_derivative_bound(&fermat_along, &radius) * &half_width;
        let conic_bound = abs_derivative_bound(&conic_along, &radius) * &half_width;
        debug_assert!(fermat_residual <= fermat_bound);
        debug_assert!(conic_residual <= conic_bound);
        let error_bound = fermat_bound.max(conic_bound);
        out.push(NumericPoint {
            root_index,
            x_lo,
            x_hi,
            x_mid,
            y_mid,
            fermat_residual,
            conic_residual,
            error_bound,
        });
    }
    Ok(out)
}

/// Renders points as CSV with the columns t, root_index, x_lo, x_hi, x_mid,
/// y_mid, one header line first.
pub fn points_csv(t: &Rational, points: &[NumericPoint]) -> String {
    let mut out = String::from("t, root_index, x_lo, x_hi, x_mid, y_mid\n");
    for p in points {
        out.push_str(&format!(
            "{}, {}, {}, {}, {}, {}\n",
            t, p.root_index, p.x_lo, p.x_hi, p.x_mid, p.y_mid
        ));
    }
    out
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().expect("coordinate fits in f64")
}

/// A static scatter of the six points over sampled arcs of the two curves.
/// Purely presentational; every coordinate derives from exact data.
pub fn points_svg(pd: &ParamData, points: &[NumericPoint]) -> String {
    const SIZE: f64 = 480.0;
    const WORLD: f64 = 2.2;
    let map = |v: f64| (v + WORLD) / (2.0 * WORLD) * SIZE;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" width=\"{SIZE}\" height=\"{SIZE}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "<line x1=\"0\" y1=\"{m}\" x2=\"{SIZE}\" y2=\"{m}\" stroke=\"#ccc\"/>\n<line x1=\"{m}\" y1=\"0\" x2=\"{m}\" y2=\"{SIZE}\" stroke=\"#ccc\"/>\n",
        m = map(0.0)
    ));
    let t = to_f64(&pd.t);
    let steps = 600;
    let mut quintic_path = Vec::new();
    for k in 0..=steps {
        let x = -WORLD + 2.0 * WORLD * (k as f64) / (steps as f64);
        let v = -1.0 - x.powi(5);
        let y = v.signum() * v.abs().powf(0.2);
        if y.abs() <= WORLD {
            quintic_path.push((map(x), map(-y)));
        }
    }
    push_polyline(&mut svg, &quintic_path, "#1f77b4");
    for sign in [1.0f64, -1.0] {
        let mut branch = Vec::new();
        for k in 0..=steps {
            let x = -WORLD + 2.0 * WORLD * (k as f64) / (steps as f64);
            let disc = t * t * (x + 1.0) * (x + 1.0) - 4.0 * (x * x + t * x + 1.0);
            if disc < 0.0 {
                if branch.len() > 1 {
                    push_polyline(&mut svg, &branch, "#d62728");
                }
                branch.clear();
                continue;
            }
            let y = (-t * (x + 1.0) + sign * disc.sqrt()) / 2.0;
            if y.abs() <= WORLD {
                branch.push((map(x), map(-y)));
            } else if branch.len() > 1 {
                push_polyline(&mut svg, &branch, "#d62728");
                branch.clear();
            }
        }
        if branch.len() > 1 {
            push_polyline(&mut svg, &branch, "#d62728");
        }
    }
    for p in points {
        let x = map(to_f64(&p.x_mid));
        let y = map(-to_f64(&p.y_mid));
        svg.push_str(&format!(
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"black\"/>\n"
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn push_polyline(svg: &mut String, pts: &[(f64, f64)], color: &str) {
    if pts.len() < 2 {
        return;
    }
    let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
    svg.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
        coords.join(" ")
    ));
}
