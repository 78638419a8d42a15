//! Small special-function kit: the exponential integral E1 needed by the
//! real-space Ewald Stokeslet.

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.5772156649015328606065;

/// Exponential integral E1(x) = int_x^inf exp(-t)/t dt for x > 0.
///
/// Power series for small arguments, modified Lentz continued fraction for
/// large; absolute accuracy near machine precision over (0, 700).
pub fn exp_int_e1(x: f64) -> f64 {
    assert!(x > 0.0, "exp_int_e1 requires x > 0, got {x}");
    if x <= 1.0 {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!)
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..=48 {
            let kf = k as f64;
            term *= -x / kf;
            let contrib = -term / kf;
            sum += contrib;
            if contrib.abs() < 1e-18 * sum.abs().max(1.0) {
                break;
            }
        }
        -EULER_GAMMA - x.ln() + sum
    } else if x > 700.0 {
        0.0
    } else {
        // E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
        let tiny = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for k in 1..200 {
            let a = -(k as f64) * (k as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                break;
            }
        }
        (-x).exp() * h
    }
}

/// E1(x) + ln(x): smooth through x -> 0 (limit -gamma). Used where the log
/// cancellation against the free-space Stokeslet must be done analytically.
pub fn exp_int_e1_plus_ln(x: f64) -> f64 {
    assert!(x >= 0.0);
    if x == 0.0 {
        return -EULER_GAMMA;
    }
    if x <= 1.0 {
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..=48 {
            let kf = k as f64;
            term *= -x / kf;
            sum += -term / kf;
        }
        -EULER_GAMMA + sum
    } else {
        exp_int_e1(x) + x.ln()
    }
}
