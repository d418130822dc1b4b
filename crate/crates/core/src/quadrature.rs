//! Gauss–Legendre panel rules together with the interpolatory
//! differentiation and indefinite-integration matrices on their nodes.

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre order must be positive");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (p0, p1) = legendre_pair(n, x);
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// `(P_{n-1}(x), P_n(x))`.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = x;
    if n == 0 {
        return (0.0, 1.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

/// `P_0(x), ..., P_{n}(x)`.
fn legendre_all(n: usize, x: f64) -> Vec<f64> {
    let mut p = vec![0.0; n + 1];
    p[0] = 1.0;
    if n >= 1 {
        p[1] = x;
    }
    for k in 1..n {
        let kf = k as f64;
        p[k + 1] = ((2.0 * kf + 1.0) * x * p[k] - kf * p[k - 1]) / (kf + 1.0);
    }
    p
}

/// Reference panel rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct PanelRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Barycentric interpolation weights of the nodes.
    pub barycentric: Vec<f64>,
    /// `d[i][j] = l_j'(x_i)`.
    pub differentiation: Vec<Vec<f64>>,
    /// `left[i][j] = int_{-1}^{x_i} l_j`.
    pub left_integration: Vec<Vec<f64>>,
    /// `right[i][j] = int_{x_i}^{1} l_j`.
    pub right_integration: Vec<Vec<f64>>,
}

impl PanelRule {
    pub fn new(order: usize) -> Self {
        let (nodes, weights) = gauss_legendre(order);
        let m = order;

        let bary: Vec<f64> = (0..m)
            .map(|j| {
                let prod: f64 = (0..m)
                    .filter(|&k| k != j)
                    .map(|k| nodes[j] - nodes[k])
                    .product();
                1.0 / prod
            })
            .collect();
        let mut differentiation = vec![vec![0.0; m]; m];
        for i in 0..m {
            let mut diag = 0.0;
            for j in 0..m {
                if i != j {
                    let v = bary[j] / bary[i] / (nodes[i] - nodes[j]);
                    differentiation[i][j] = v;
                    diag -= v;
                }
            }
            differentiation[i][i] = diag;
        }

        // l_j = sum_k (2k+1)/2 w_j P_k(x_j) P_k, exact for k < m.
        let p_at_nodes: Vec<Vec<f64>> = nodes.iter().map(|&x| legendre_all(m, x)).collect();
        let mut left_integration = vec![vec![0.0; m]; m];
        for i in 0..m {
            let p = &p_at_nodes[i];
            // int_{-1}^{x} P_k = (P_{k+1} - P_{k-1}) / (2k + 1), int P_0 = x + 1.
            let prim: Vec<f64> = (0..m)
                .map(|k| {
                    if k == 0 {
                        nodes[i] + 1.0
                    } else {
                        (p[k + 1] - p[k - 1]) / (2.0 * k as f64 + 1.0)
                    }
                })
                .collect();
            for j in 0..m {
                left_integration[i][j] = (0..m)
                    .map(|k| (2.0 * k as f64 + 1.0) / 2.0 * weights[j] * p_at_nodes[j][k] * prim[k])
                    .sum();
            }
        }
        let right_integration = left_integration
            .iter()
            .map(|row| row.iter().zip(&weights).map(|(l, w)| w - l).collect())
            .collect();

        PanelRule {
            nodes,
            weights,
            barycentric: bary,
            differentiation,
            left_integration,
            right_integration,
        }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Evaluates the interpolant through `(nodes, values)` at `x` in `[-1, 1]`.
    pub fn interpolate<T>(&self, values: &[T], x: f64) -> T
    where
        T: Copy + std::ops::Mul<f64, Output = T> + std::ops::Add<Output = T> + std::ops::Div<f64, Output = T>,
    {
        if let Some(i) = self.nodes.iter().position(|&n| n == x) {
            return values[i];
        }
        let mut num: Option<T> = None;
        let mut den = 0.0;
        for ((&n, &b), &v) in self.nodes.iter().zip(&self.barycentric).zip(values) {
            let c = b / (x - n);
            den += c;
            num = Some(match num {
                None => v * c,
                Some(acc) => acc + v * c,
            });
        }
        num.expect("empty rule") / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        for n in [1, 2, 5, 8, 16, 24] {
            let (x, w) = gauss_legendre(n);
            for deg in 0..(2 * n) {
                let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((q - exact).abs() < 1e-13, "n={n} deg={deg}");
            }
        }
    }

    #[test]
    fn matrices_act_exactly_on_polynomials() {
        let rule = PanelRule::new(12);
        let f: Vec<f64> = rule.nodes.iter().map(|x| x.powi(7) - 2.0 * x).collect();
        for i in 0..12 {
            let x = rule.nodes[i];
            let d: f64 = (0..12).map(|j| rule.differentiation[i][j] * f[j]).sum();
            assert!((d - (7.0 * x.powi(6) - 2.0)).abs() < 1e-11);
            let l: f64 = (0..12).map(|j| rule.left_integration[i][j] * f[j]).sum();
            let prim = |t: f64| t.powi(8) / 8.0 - t * t;
            assert!((l - (prim(x) - prim(-1.0))).abs() < 1e-13);
            let r: f64 = (0..12).map(|j| rule.right_integration[i][j] * f[j]).sum();
            assert!((r - (prim(1.0) - prim(x))).abs() < 1e-13);
        }
    }
}
