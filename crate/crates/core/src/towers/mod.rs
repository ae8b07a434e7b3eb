//! The towers F_d = F_q(t^{1/d}) and K_d = F_q(μ_d)(t^{1/d}), orbits of
//! multiplication by q on Z/dZ, and the block-cyclic determinant lemma.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::numth::{gcd, mult_order};
use crate::algebra::qmat::{poly_rem, q as qint, QMatrix, Q};
use crate::error::{Error, Result};
use crate::lfunction::{analytic_rank, constant_extension, l_polynomial, LPoly};
use crate::local::{global_data, GlobalData};
use crate::weierstrass::{base_change_pow, extend_constants, Curve};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    pub d: u64,
    pub q: u64,
    pub orbits: Vec<Vec<u64>>,
}

impl OrbitDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.len()).collect()
    }
}

/// Orbits of `j -> qj` on Z/dZ, each sorted, listed by least element.
pub fn orbit_decomposition(d: u64, q: u64) -> Result<OrbitDecomposition> {
    if d == 0 || gcd(d, q) != 1 {
        return Err(Error::NotCoprime { a: q, b: d });
    }
    let mut seen = vec![false; d as usize];
    let mut orbits = Vec::new();
    for j in 0..d {
        if seen[j as usize] {
            continue;
        }
        let mut o = Vec::new();
        let mut x = j;
        while !seen[x as usize] {
            seen[x as usize] = true;
            o.push(x);
            x = (x as u128 * q as u128 % d as u128) as u64;
        }
        o.sort_unstable();
        orbits.push(o);
    }
    Ok(OrbitDecomposition { d, q, orbits })
}

/// `V = W_0 ⊕ ... ⊕ W_{a-1}` with `φ` and a symmetric pairing, as matrices
/// in a basis adapted to the blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub a: usize,
    pub dims: Vec<usize>,
    pub phi: QMatrix,
    pub pairing: QMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LaHypothesis {
    OddBlockCount,
    EvenDimension,
    DegenerateCrossPairing,
    NotInvertible,
    NotBlockCyclic,
    PairingNotSymmetric,
    PairingDegenerate,
    NotIsometry,
}

impl BlockSystem {
    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for d in &self.dims {
            off.push(off.last().unwrap() + d);
        }
        off
    }

    /// Every hypothesis of the lemma, in a fixed order.
    pub fn check_hypotheses(&self) -> std::result::Result<(), LaHypothesis> {
        let n = self.phi.rows;
        let off = self.offsets();
        if self.phi.det().is_zero() {
            return Err(LaHypothesis::NotInvertible);
        }
        for i in 0..self.a {
            let next = (i + 1) % self.a;
            for j in 0..self.a {
                if j == next {
                    continue;
                }
                let blk = self.phi.block(off[j], off[i], self.dims[j], self.dims[i]);
                if blk.data.iter().any(|x| !x.is_zero()) {
                    return Err(LaHypothesis::NotBlockCyclic);
                }
            }
        }
        if self.pairing != self.pairing.transpose() {
            return Err(LaHypothesis::PairingNotSymmetric);
        }
        if self.pairing.det().is_zero() {
            return Err(LaHypothesis::PairingDegenerate);
        }
        if self.phi.transpose().mul(&self.pairing).mul(&self.phi) != self.pairing {
            return Err(LaHypothesis::NotIsometry);
        }
        debug_assert_eq!(off[self.a], n);
        if self.a % 2 == 1 {
            return Err(LaHypothesis::OddBlockCount);
        }
        let h = self.a / 2;
        let cross = self.pairing.block(off[h], off[0], self.dims[h], self.dims[0]);
        if cross.rows != cross.cols || cross.det().is_zero() {
            return Err(LaHypothesis::DegenerateCrossPairing);
        }
        if self.dims[0] % 2 == 0 {
            return Err(LaHypothesis::EvenDimension);
        }
        Ok(())
    }

    /// `det(1 - φT)`, little-endian.
    pub fn det_one_minus_phi_t(&self) -> Vec<Q> {
        let mut c = self.phi.charpoly();
        c.reverse();
        c
    }

    /// Whether `1 - T^a` divides `det(1 - φT)`.
    pub fn divisible(&self) -> bool {
        let mut m = vec![Q::zero(); self.a + 1];
        m[0] = Q::one();
        m[self.a] = -Q::one();
        poly_rem(&self.det_one_minus_phi_t(), &m).is_empty()
    }
}

/// Checks the hypotheses, then returns the divisibility verdict.
pub fn lemma_la_verify(b: &BlockSystem) -> std::result::Result<bool, LaHypothesis> {
    b.check_hypotheses()?;
    Ok(b.divisible())
}

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    loop {
        let mut m = QMatrix::zeros(n, n);
        for x in m.data.iter_mut() {
            *x = qint(rng.gen_range(-3..=3));
        }
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// A random block system with `a` blocks of dimension `dim`.
///
/// `W_k` pairs only with `W_{k+a/2}`, through `A_k^{-T} M A_{k+a/2}^{-1}`
/// where `A_k = φ_{k-1} ⋯ φ_0`; the last block map `M^{-T} M A_{a-1}^{-1}`
/// is the unique choice that makes `φ` an isometry.
pub fn random_block_system(a: usize, dim: usize, rng: &mut ChaCha8Rng) -> BlockSystem {
    assert!(a >= 2 && a % 2 == 0);
    let n = a * dim;
    let h = a / 2;
    let m = random_invertible(dim, rng);
    let mut maps: Vec<QMatrix> = (0..a - 1).map(|_| random_invertible(dim, rng)).collect();
    let mut acc = vec![QMatrix::identity(dim)];
    for k in 0..a - 1 {
        let next = maps[k].mul(&acc[k]);
        acc.push(next);
    }
    let mt_inv = m.transpose().inverse().unwrap();
    let last = mt_inv.mul(&m).mul(&acc[a - 1].inverse().unwrap());
    maps.push(last);
    let mut phi = QMatrix::zeros(n, n);
    for (i, map) in maps.iter().enumerate() {
        let j = (i + 1) % a;
        phi.set_block(j * dim, i * dim, map);
    }
    let mut pairing = QMatrix::zeros(n, n);
    for k in 0..h {
        let blk = acc[k].transpose().inverse().unwrap().mul(&m).mul(&acc[k + h].inverse().unwrap());
        pairing.set_block(k * dim, (k + h) * dim, &blk);
        pairing.set_block((k + h) * dim, k * dim, &blk.transpose());
    }
    BlockSystem { a, dims: vec![dim; a], phi, pairing }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The seed from `FFEC_SEED`, or `default`.
pub fn env_seed(default: u64) -> u64 {
    std::env::var("FFEC_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default)
}

/// `L(E/F_d)` or, with `use_mu_d`, `L(E/K_d)`.
///
/// Over `K_d` the polynomial is obtained from the one over `F_d` by raising
/// inverse roots to the power `[F_q(μ_d) : F_q]`.
pub fn tower_l(e: &Curve, d: u32, use_mu_d: bool) -> Result<LPoly> {
    let q = e.q() as u64;
    let m = mult_order(q, d as u64)?;
    let base = if d == 1 { l_polynomial(e)? } else { l_polynomial(&base_change_pow(e, d)?)? };
    Ok(if use_mu_d && m > 1 { constant_extension(&base, m) } else { base })
}

/// `L(E/K_d)` computed directly over the extended constant field.
pub fn tower_l_direct(e: &Curve, d: u32) -> Result<LPoly> {
    let m = mult_order(e.q() as u64, d as u64)?;
    l_polynomial(&base_change_pow(&extend_constants(e, m)?, d)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerRow {
    pub d: u64,
    pub n: u32,
    pub field: String,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub rank: usize,
    pub c_obs: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerScan {
    pub q: u64,
    pub nprime_deg: i64,
    pub warning: Option<String>,
    pub rows: Vec<TowerRow>,
    /// `max_n (d/(2n) - rank over F_d)`.
    pub c_obs: f64,
}

/// Ranks over `F_d` and `K_d` for `d = q^n + 1`, `n = 1..=n_max`.
pub fn rank_growth_scan(e: &Curve, n_max: u32) -> Result<TowerScan> {
    let g: GlobalData = global_data(e)?;
    let q = e.q() as u64;
    let np = g.nprime_deg();
    let warning = (np % 2 == 0).then(|| format!("deg n' = {np} is even; the growth theorem does not apply"));
    let mut rows = Vec::new();
    let mut c_obs = f64::NEG_INFINITY;
    for n in 1..=n_max {
        let d = q.pow(n) + 1;
        let lf = tower_l(e, d as u32, false)?;
        let lk = tower_l(e, d as u32, true)?;
        let rf = analytic_rank(&lf);
        let rk = analytic_rank(&lk);
        let c = d as f64 / (2.0 * n as f64) - rf as f64;
        c_obs = c_obs.max(c);
        rows.push(TowerRow { d, n, field: "F_d".into(), big_n: lf.degree(), rank: rf, c_obs: c });
        let ck = d as f64 / (2.0 * n as f64) - rk as f64;
        rows.push(TowerRow { d, n, field: "K_d".into(), big_n: lk.degree(), rank: rk, c_obs: ck });
    }
    Ok(TowerScan { q, nprime_deg: np, warning, rows, c_obs })
}

/// `(ord_{T=1/q} L, deg L - ord_{T=1/q} L)`.
pub fn trivial_part(l: &LPoly) -> (usize, usize) {
    let r = analytic_rank(l);
    (r, l.degree() - r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbits() {
        let o = orbit_decomposition(4, 3).unwrap();
        assert_eq!(o.orbits, vec![vec![0], vec![1, 3], vec![2]]);
        let o = orbit_decomposition(5, 2).unwrap();
        assert_eq!(o.orbits, vec![vec![0], vec![1, 2, 3, 4]]);
        assert_eq!(orbit_decomposition(1, 7).unwrap().orbits, vec![vec![0]]);
        assert!(orbit_decomposition(6, 3).is_err());
    }

    #[test]
    fn swap_instance() {
        let b = BlockSystem {
            a: 2,
            dims: vec![1, 1],
            phi: QMatrix::from_ints(&[&[0, 1], &[1, 0]]),
            pairing: QMatrix::from_ints(&[&[0, 1], &[1, 0]]),
        };
        assert_eq!(b.det_one_minus_phi_t(), vec![qint(1), qint(0), qint(-1)]);
        assert_eq!(lemma_la_verify(&b), Ok(true));
    }

    #[test]
    fn generated_instances_satisfy_hypotheses() {
        let mut rng = seeded_rng(7);
        for (a, dim) in [(2, 1), (4, 3), (2, 5)] {
            let b = random_block_system(a, dim, &mut rng);
            assert_eq!(lemma_la_verify(&b), Ok(true));
        }
        let b = random_block_system(2, 2, &mut rng);
        assert_eq!(lemma_la_verify(&b), Err(LaHypothesis::EvenDimension));
    }
}
