//! The fixed boundary-collar cutoff used by the quasimode construction.
//!
//! chi is 1 on |rho| <= delta_c/2, 0 on |rho| >= delta_c, and a C^2
//! smoothstep (6t^5 - 15t^4 + 10t^3 transition) in between, where rho is the
//! signed distance to the boundary and delta_c = min(a/2, 1/2).

/// Collar width for a domain of radius a.
pub fn collar_width(a: f64) -> f64 {
    (0.5 * a).min(0.5)
}

/// chi(rho), symmetric in rho.
pub fn cutoff(rho: f64, collar: f64) -> f64 {
    let t = transition(rho.abs(), collar);
    match t {
        None => {
            if rho.abs() <= 0.5 * collar {
                1.0
            } else {
                0.0
            }
        }
        Some(t) => 1.0 - smoothstep(t),
    }
}

/// d(chi)/d(rho).
pub fn cutoff_derivative(rho: f64, collar: f64) -> f64 {
    match transition(rho.abs(), collar) {
        None => 0.0,
        Some(t) => {
            // d t / d|rho| = 2/collar; d|rho|/d rho = sign(rho).
            -smoothstep_derivative(t) * 2.0 / collar * rho.signum()
        }
    }
}

/// d^2(chi)/d(rho)^2.
pub fn cutoff_second_derivative(rho: f64, collar: f64) -> f64 {
    match transition(rho.abs(), collar) {
        None => 0.0,
        Some(t) => -smoothstep_second_derivative(t) * (2.0 / collar).powi(2),
    }
}

/// Map |rho| into the transition coordinate t in (0,1), or None outside the
/// transition band.
fn transition(abs_rho: f64, collar: f64) -> Option<f64> {
    let half = 0.5 * collar;
    if abs_rho <= half || abs_rho >= collar {
        None
    } else {
        Some((abs_rho - half) / half)
    }
}

fn smoothstep(t: f64) -> f64 {
    t * t * t * (10.0 + t * (-15.0 + 6.0 * t))
}

fn smoothstep_derivative(t: f64) -> f64 {
    30.0 * t * t * (1.0 - t) * (1.0 - t)
}

fn smoothstep_second_derivative(t: f64) -> f64 {
    60.0 * t * (1.0 - t) * (1.0 - 2.0 * t)
}

/// Radii where the cutoff (centered at the boundary r = a) loses analyticity;
/// quadrature panels should split there.
pub fn cutoff_breakpoints(a: f64, collar: f64) -> [f64; 5] {
    [a - collar, a - 0.5 * collar, a, a + 0.5 * collar, a + collar]
}
