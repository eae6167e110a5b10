//! Independent oracles for the integration tests: semistandard tableau
//! enumeration, monomial expansions, and the expanded plethystic forms of
//! coproducts and kernels.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use symtwist::characters::kronecker_coefficient;
use symtwist::partition::{partitions_of, partitions_up_to};
use symtwist::plethysm::plethysm_single;
use symtwist::{Integer, Partition, Schur, Tensor, TensorSer};

pub type Poly = HashMap<Vec<usize>, i64>;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn s(parts: &[usize]) -> Schur {
    Schur::s(parts)
}

/// Every semistandard tableau of `shape` with entries `1..=n`, recorded by
/// content.
pub fn ssyt_contents(shape: &[usize], n: usize) -> Poly {
    static MEMO: LazyLock<Mutex<HashMap<(Vec<usize>, usize), Poly>>> = LazyLock::new(Default::default);
    let key = (shape.to_vec(), n);
    if let Some(v) = MEMO.lock().unwrap().get(&key) {
        return v.clone();
    }
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();
    let mut content = vec![0; n];
    let mut out = Poly::new();
    fill(&cells, 0, n, &mut grid, &mut content, &mut out);
    MEMO.lock().unwrap().insert(key, out.clone());
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    n: usize,
    grid: &mut Vec<Vec<usize>>,
    content: &mut Vec<usize>,
    out: &mut Poly,
) {
    if k == cells.len() {
        *out.entry(content.clone()).or_default() += 1;
        return;
    }
    let (i, j) = cells[k];
    let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=n {
        grid[i][j] = v;
        content[v - 1] += 1;
        fill(cells, k + 1, n, grid, content, out);
        content[v - 1] -= 1;
    }
    grid[i][j] = 0;
}

pub fn ssyt_count(shape: &Partition, n: usize) -> i64 {
    ssyt_contents(shape.parts(), n).values().sum()
}

/// Number of semistandard tableaux of shape `nu` and content `alpha`.
pub fn kostka(nu: &Partition, alpha: &Partition) -> i64 {
    if nu.weight() != alpha.weight() {
        return 0;
    }
    let n = alpha.len();
    let mut key = alpha.parts().to_vec();
    key.resize(n, 0);
    ssyt_contents(nu.parts(), n).get(&key).copied().unwrap_or(0)
}

fn is_partition_shaped(e: &[usize]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

fn trim(e: &[usize]) -> Partition {
    Partition::from_unsorted(e.to_vec())
}

/// Recovers the Schur expansion of a homogeneous degree-`d` symmetric
/// polynomial in at least `d` variables from its coefficients at
/// partition-shaped exponents, by peeling off leading terms in lexicographic
/// order.
pub fn schur_from_dominant(coeffs: &HashMap<Partition, i64>, d: usize) -> Schur {
    let mut found: Vec<(Partition, i64)> = Vec::new();
    // Canonical order lists partitions of a weight lexicographically largest first.
    for nu in partitions_of(d, None) {
        let mut c = coeffs.get(&nu).copied().unwrap_or(0);
        for (prev, cp) in &found {
            c -= cp * kostka(prev, &nu);
        }
        if c != 0 {
            found.push((nu, c));
        }
    }
    found.into_iter().map(|(nu, c)| (nu, Integer::from(c))).collect()
}

/// Coefficients at partition-shaped exponents of a polynomial.
pub fn dominant_part(poly: &Poly) -> HashMap<Partition, i64> {
    poly.iter()
        .filter(|(e, c)| **c != 0 && is_partition_shaped(e))
        .map(|(e, c)| (trim(e), *c))
        .collect()
}

/// `s_λ s_μ` by multiplying monomial expansions in `|λ|+|μ|` variables.
pub fn lr_product_oracle(lambda: &Partition, mu: &Partition) -> Schur {
    let d = lambda.weight() + mu.weight();
    let n = d.max(1);
    let a = ssyt_contents(lambda.parts(), n);
    let b = ssyt_contents(mu.parts(), n);
    let mut dominant = HashMap::new();
    for nu in partitions_of(d, Some(n)) {
        let mut target = nu.parts().to_vec();
        target.resize(n, 0);
        let mut total = 0;
        for (e, c) in &a {
            if e.iter().zip(&target).all(|(x, t)| x <= t) {
                let rest: Vec<usize> = target.iter().zip(e).map(|(t, x)| t - x).collect();
                total += c * b.get(&rest).copied().unwrap_or(0);
            }
        }
        dominant.insert(nu, total);
    }
    schur_from_dominant(&dominant, d)
}

/// `s_σ[s_ξ]` by substituting the monomials of `s_ξ` into `s_σ`.
pub fn plethysm_oracle(xi: &Partition, sigma: &Partition) -> Schur {
    let d = xi.weight() * sigma.weight();
    if d == 0 {
        return if sigma.is_empty() { Schur::one() } else { Schur::zero() };
    }
    let n = d;
    let mut letters: Vec<Vec<usize>> = Vec::new();
    for (e, c) in ssyt_contents(xi.parts(), n) {
        for _ in 0..c {
            letters.push(e.clone());
        }
    }
    letters.sort();
    let mut poly = Poly::new();
    for (content, c) in ssyt_contents(sigma.parts(), letters.len()) {
        let mut e = vec![0; n];
        for (k, &m) in content.iter().enumerate() {
            for (x, y) in e.iter_mut().zip(&letters[k]) {
                *x += m * y;
            }
        }
        if is_partition_shaped(&e) {
            *poly.entry(e).or_default() += c;
        }
    }
    schur_from_dominant(&dominant_part(&poly), d)
}

/// `Π (1 - x_i x_j)` over `i < j` (or `i ≤ j` when `diagonal`) in `n`
/// variables, truncated at degree `max_degree`.
pub fn pair_product(n: usize, diagonal: bool, max_degree: usize) -> Poly {
    let mut poly = Poly::new();
    poly.insert(vec![0; n], 1);
    for i in 0..n {
        for j in i..n {
            if i == j && !diagonal {
                continue;
            }
            let mut next = poly.clone();
            for (e, c) in &poly {
                if e.iter().sum::<usize>() + 2 > max_degree {
                    continue;
                }
                let mut f = e.clone();
                f[i] += 1;
                f[j] += 1;
                *next.entry(f).or_default() -= c;
            }
            next.retain(|_, c| *c != 0);
            poly = next;
        }
    }
    poly
}

/// Schur expansion of the degree-`d` part of a polynomial.
pub fn schur_degree_part(poly: &Poly, d: usize) -> Schur {
    let part: Poly = poly
        .iter()
        .filter(|(e, _)| e.iter().sum::<usize>() == d)
        .map(|(e, c)| (e.clone(), *c))
        .collect();
    schur_from_dominant(&dominant_part(&part), d)
}

/// `Σ_ξ s_ξ ⊗ s_ξ` truncated at total degree `cutoff`, built from scratch.
pub fn cauchy_series(cutoff: usize) -> TensorSer {
    let mut pieces = vec![Tensor::zero(); cutoff + 1];
    for xi in partitions_up_to(cutoff / 2) {
        pieces[2 * xi.weight()].add_term((xi.clone(), xi), Integer::from(1));
    }
    TensorSer::from_pieces(pieces).unwrap()
}

/// The expanded kernel: one factor `Σ_σ s_σ[s_ξ] ⊗ s_σ[s_η]` for every
/// proper cut `s_ξ ⊗ s_η` of `s_π`, repeated by its multiplicity.
pub fn expanded_kernel(pi: &Partition, cutoff: usize) -> TensorSer {
    let mut k = TensorSer::unit(cutoff);
    for ((xi, eta), c) in &Schur::basis(pi.clone()).outer_coproduct() {
        if xi.is_empty() || eta.is_empty() {
            continue;
        }
        let m: i64 = c.try_into().unwrap();
        let mut pieces = vec![Tensor::zero(); cutoff + 1];
        for sigma in partitions_up_to(cutoff / pi.weight()) {
            let left = plethysm_oracle(xi, &sigma);
            let right = plethysm_oracle(eta, &sigma);
            pieces[sigma.weight() * pi.weight()] += &Tensor::tensor(&left, &right);
        }
        let factor = TensorSer::from_pieces(pieces).unwrap();
        for _ in 0..m {
            k = k.mul(&factor).unwrap();
        }
    }
    k
}

/// `s_α[s_λ]`, where `s_α[1]` is one for rows and zero otherwise.
fn plethysm_or_unit(lambda: &Partition, alpha: &Partition) -> Schur {
    if alpha.is_empty() {
        return Schur::one();
    }
    if lambda.is_empty() {
        return if alpha.is_row() { Schur::one() } else { Schur::zero() };
    }
    plethysm_single(lambda, alpha).unwrap()
}

/// `s_ν[a ⊗ b] = Σ γ^ν_{αβ} s_α[s_a] ⊗ s_β[s_b]`.
fn plethysm_of_tensor_term(nu: &Partition, a: &Partition, b: &Partition) -> Tensor {
    let mut out = Tensor::zero();
    let n = nu.weight();
    for alpha in partitions_of(n, None) {
        let left = plethysm_or_unit(a, &alpha);
        if left.is_zero() {
            continue;
        }
        for beta in partitions_of(n, None) {
            let g = kronecker_coefficient(nu, &alpha, &beta);
            if g == 0 {
                continue;
            }
            let right = plethysm_or_unit(b, &beta);
            out.add_scaled(&Tensor::tensor(&left, &right), &Integer::from(g));
        }
    }
    out
}

/// `s_μ[T]` for a Schur-positive tensor `T`, splitting `T` into unit terms
/// and using `s_ν[X + Y] = Σ c^ν_{ξη} s_ξ[X] s_η[Y]`.
pub fn plethysm_of_tensor(mu: &Partition, t: &Tensor) -> Tensor {
    let mut terms = Vec::new();
    for ((a, b), c) in t {
        let c: i64 = c.try_into().unwrap();
        assert!(c > 0, "tensor argument must be positive");
        for _ in 0..c {
            terms.push((a.clone(), b.clone()));
        }
    }
    let mut memo = HashMap::new();
    tensor_rec(mu, 0, &terms, &mut memo)
}

fn tensor_rec(
    nu: &Partition,
    i: usize,
    terms: &[(Partition, Partition)],
    memo: &mut HashMap<(Partition, usize), Tensor>,
) -> Tensor {
    if i == terms.len() {
        return if nu.is_empty() { Tensor::one() } else { Tensor::zero() };
    }
    if let Some(v) = memo.get(&(nu.clone(), i)) {
        return v.clone();
    }
    let (a, b) = &terms[i];
    let mut out = Tensor::zero();
    for ((xi, eta), c) in &Schur::basis(nu.clone()).outer_coproduct() {
        let head = plethysm_of_tensor_term(xi, a, b);
        if head.is_zero() {
            continue;
        }
        let tail = tensor_rec(eta, i + 1, terms, memo);
        out.add_scaled(&head.tensor_product(&tail), c);
    }
    memo.insert((nu.clone(), i), out.clone());
    out
}
