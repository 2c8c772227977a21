//! Straightforward rational evaluation of `f(Q) x <= r x`, entry by entry.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use qplanar_core::Graph;

fn q_times(g: &Graph, x: &[BigRational]) -> Vec<BigRational> {
    (0..g.n())
        .map(|u| {
            let mut s = &x[u] * BigRational::from_integer(BigInt::from(g.degree(u)));
            for &v in g.neighbors(u) {
                s += &x[v];
            }
            s
        })
        .collect()
}

/// `min_i (r x_i - (f(Q) x)_i)` with `f = Σ poly[k] t^k`, summing the powers
/// `Q^k x` explicitly.
pub fn worst_slack(g: &Graph, x: &[BigRational], r: &BigRational, poly: &[BigRational]) -> BigRational {
    let n = g.n();
    let mut power = x.to_vec();
    let mut fx = vec![BigRational::zero(); n];
    for (k, a) in poly.iter().enumerate() {
        if k > 0 {
            power = q_times(g, &power);
        }
        for i in 0..n {
            fx[i] += a * &power[i];
        }
    }
    (0..n).map(|i| r * &x[i] - &fx[i]).min().unwrap()
}
