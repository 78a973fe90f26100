#![allow(dead_code)]

use std::sync::Arc;

use ore_hermite::field::IntPoly;
use ore_hermite::text::{parse_matrix, parse_orepoly};
use ore_hermite::{OreMatrix, OrePoly, RatFun, RingSpec, UPoly};
use rand::Rng;

pub fn diff() -> Arc<RingSpec> {
    Arc::new(RingSpec::differential())
}

pub fn shift() -> Arc<RingSpec> {
    Arc::new(RingSpec::shift())
}

pub fn matrix(ring: &str, rows: &[&str]) -> OreMatrix {
    let cols = rows[0].split(';').count();
    let text = format!("ring {ring}\nrows {} cols {cols}\n{}\n", rows.len(), rows.join("\n"));
    parse_matrix(&text).unwrap_or_else(|e| panic!("{e}\n{text}"))
}

pub fn poly(ring: &Arc<RingSpec>, src: &str) -> OrePoly {
    parse_orepoly(src, ring).unwrap_or_else(|e| panic!("{e}: {src}"))
}

pub fn intro() -> OreMatrix {
    matrix(
        "differential",
        &[
            "1+(z+2)*D+D^2; 2+(2*z+1)*D; 1+(1+z)*D",
            "(2*z+z^2)+z*D; (2+2*z+2*z^2)+D; 4*z+z^2",
            "(3+z)+(3+z)*D+D^2; (8+4*z)+(5+3*z)*D+D^2; (7+8*z)+(2+4*z)*D",
        ],
    )
}

pub fn intro_h() -> OreMatrix {
    matrix(
        "differential",
        &[
            "(2+z)+D; 1+2*z; (-2+z+2*z^2)/(2*z) - 1/(2*z)*D",
            "0; (2+z)+D; 1+7*z/2+(1/2)*D",
            "0; 0; -2/z + ((-1+2*z+z^2)/z)*D + D^2",
        ],
    )
}

pub fn worked() -> OreMatrix {
    matrix(
        "differential",
        &[
            "(z+1)+D; z+z*D; D",
            "(z^2+z)+z*D; z+1; 2*D",
            "(-z-z^2)-z*D; z*D; z*D",
        ],
    )
}

pub fn worked_t() -> OreMatrix {
    matrix(
        "differential",
        &[
            "(z+1)/(2*z+1); -z/(2*z+1); -(z+1)/(2*z+1)",
            "-z/(2*z+1); (z+1)/(2*z+1); z/(2*z+1)",
            "-(2*z^2+3*z+2)/((z^2+z+2)*(2*z+1)) - (z/(z^2+z+2))*D; \
             (2*z^2+z-1)/((z^2+z+2)*(2*z+1)) + ((z+1)/(z^2+z+2))*D; \
             (2*z^3-z^2-2*z-1)/(z*(z^2+z+2)*(2*z+1)) + (z/(z^2+z+2))*D",
        ],
    )
}

pub fn worked_h() -> OreMatrix {
    matrix(
        "differential",
        &[
            "(z+1)+D; 0; -((z^2+2*z-1)/(2*z+1))*D",
            "0; 1; ((z^2+z+2)/(2*z+1))*D",
            "0; 0; ((2*z^3+3*z^2-2*z-5)/((z^2+z+2)*(2*z+1)))*D + D^2",
        ],
    )
}

/// Random polynomial in `z` with small integer coefficients.
pub fn rand_upoly<R: Rng>(rng: &mut R, deg_z: usize) -> UPoly {
    let d = rng.gen_range(0..=deg_z);
    UPoly::from_i64(&(0..=d).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>())
}

pub fn rand_ore<R: Rng>(rng: &mut R, ring: &Arc<RingSpec>, deg_d: usize, deg_z: usize) -> OrePoly {
    let k = rng.gen_range(0..=deg_d);
    let coeffs = (0..=k).map(|_| RatFun::from_poly(rand_upoly(rng, deg_z))).collect();
    OrePoly::new(coeffs, ring.clone())
}

/// Random polynomial whose `D`-degree is exactly `deg_d`.
pub fn rand_ore_exact<R: Rng>(rng: &mut R, ring: &Arc<RingSpec>, deg_d: usize, deg_z: usize) -> OrePoly {
    loop {
        let mut coeffs: Vec<RatFun> =
            (0..deg_d).map(|_| RatFun::from_poly(rand_upoly(rng, deg_z))).collect();
        let lead = rand_upoly(rng, deg_z);
        if lead.is_zero() {
            continue;
        }
        coeffs.push(RatFun::from_poly(lead));
        return OrePoly::new(coeffs, ring.clone());
    }
}

pub fn rand_matrix<R: Rng>(
    rng: &mut R,
    ring: &Arc<RingSpec>,
    rows: usize,
    cols: usize,
    deg_d: usize,
    deg_z: usize,
) -> OreMatrix {
    let entries = (0..rows * cols)
        .map(|_| rand_ore(rng, ring, deg_d, deg_z))
        .collect();
    OreMatrix::new(ring.clone(), rows, cols, entries).unwrap()
}

/// Random matrix of full rank over the skew field.
pub fn rand_full_rank<R: Rng>(
    rng: &mut R,
    ring: &Arc<RingSpec>,
    n: usize,
    deg_d: usize,
    deg_z: usize,
) -> OreMatrix {
    loop {
        let m = rand_matrix(rng, ring, n, n, deg_d, deg_z);
        if ore_hermite::detform::ore_rank(&m) == n {
            return m;
        }
    }
}

pub fn int_poly_deg(p: &IntPoly) -> i64 {
    p.degree().map_or(-1, |d| d as i64)
}
