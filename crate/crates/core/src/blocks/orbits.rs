//! Orbits and isotropy groups of the action of `S_{n+1}` on `{e, f}^n`.

use serde::Serialize;

use super::{binomial, factorial};
use crate::error::{CoreError, Result};
use crate::group::strings::{generator_images, perm_operator, string_action, theorem12_operator, BitString};
use crate::group::{orbit_stabilizer, Perm, ENUMERATION_BUDGET};

/// Largest `n` for orbit data.
pub const MAX_ORBIT_N: usize = 16;
/// Largest `n` for which stabilizers are also enumerated element by element.
pub const ENUMERATED_STABILIZER_N: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct OrbitRecord {
    /// `e^m f^{n-m}`, with `m` the largest number of `e`s in the orbit.
    pub representative: String,
    pub m: usize,
    pub size: usize,
    pub middle: bool,
    pub expected_size: u128,
    pub stabilizer_order: u128,
    pub expected_stabilizer_order: u128,
    /// Sizes of the blocks of the Young subgroup generated by the
    /// transpositions fixing the representative.
    pub young_blocks: Vec<usize>,
    /// `S_{m+1} × S_{n-m}`, or `S_{r+1} ≀ C_2` for the middle orbit.
    pub isotropy_type: String,
    /// The stabilizer was also enumerated and has the stated order.
    pub enumerated: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitData {
    pub n: usize,
    pub orbits: Vec<OrbitRecord>,
    /// Orbit sizes add up to `2^n`.
    pub partition_ok: bool,
    pub ok: bool,
}

fn ops(n: usize) -> Result<Vec<Vec<u32>>> {
    generator_images(n)
}

fn fixes(n: usize, images: &[Vec<u32>], w: &Perm, point: u32) -> bool {
    perm_operator(n, images, w)[point as usize] == point
}

/// `ρ = σ τ_{2r+1}` with `σ = (1, r+1)(2, r+2)...(r, 2r)` in `S_{2r+2}`.
pub fn middle_orbit_rho(r: usize) -> Result<Perm> {
    let n = 2 * r + 1;
    let sigma = Perm::from_cycles(n + 1, &(1..=r).map(|i| vec![i, r + i]).collect::<Vec<_>>())?;
    let tau = Perm::transposition(n + 1, n, n + 1)?;
    Ok(sigma.compose(&tau))
}

fn connected_blocks(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut sizes = vec![0usize; n + 1];
    for x in 0..=n {
        let root = find(&mut parent, x);
        sizes[root] += 1;
    }
    let mut out: Vec<usize> = sizes.into_iter().filter(|&s| s > 1).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Orbit sizes and isotropy groups, with structural certificates: the
/// transpositions fixing a representative generate a Young subgroup whose
/// order (doubled by `ρ` in the middle case) equals `(n+1)!/|orbit|`.
pub fn dn_orbit_data(n: usize) -> Result<OrbitData> {
    if !(1..=MAX_ORBIT_N).contains(&n) {
        return Err(CoreError::InvalidInput(format!("n = {n} outside 1..={MAX_ORBIT_N}")));
    }
    let action = string_action(n)?;
    let images = ops(n)?;
    let group_order = factorial(n + 1);
    let mut records = Vec::new();
    for orbit in action.orbits() {
        let m = orbit.iter().map(|&p| n - (p as u32).count_ones() as usize).max().unwrap_or(0);
        // entries 1..=m are e (bit 0), the rest f
        let rep_bits: u32 = ((1u32 << n) - 1) & !((1u32 << m) - 1);
        if !orbit.contains(&(rep_bits as usize)) {
            return Err(CoreError::RelationFailure(format!("e^{m} f^{} is not in its orbit", n - m)));
        }
        let middle = n % 2 == 1 && m == n / 2;
        let size = orbit.len();
        let (expected_size, expected_stab) = if middle {
            let r = n / 2;
            (binomial(2 * r + 1, r), 2 * factorial(r + 1).pow(2))
        } else {
            (binomial(n + 1, m + 1), factorial(m + 1) * factorial(n - m))
        };
        let mut edges = Vec::new();
        for i in 1..=n + 1 {
            for j in i + 1..=n + 1 {
                if fixes(n, &images, &Perm::transposition(n + 1, i, j)?, rep_bits) {
                    edges.push((i - 1, j - 1));
                }
            }
        }
        let young_blocks = connected_blocks(n, &edges);
        let young: u128 = young_blocks.iter().map(|&b| factorial(b)).product();
        let index = if middle {
            let rho = middle_orbit_rho(n / 2)?;
            if !fixes(n, &images, &rho, rep_bits) {
                return Err(CoreError::RelationFailure("ρ does not fix the middle index".into()));
            }
            2
        } else {
            1
        };
        let stabilizer_order = group_order / size as u128;
        let mut ok = stabilizer_order * size as u128 == group_order
            && young * index == stabilizer_order
            && size as u128 == expected_size
            && stabilizer_order == expected_stab;
        let enumerated = n <= ENUMERATED_STABILIZER_N;
        if enumerated {
            let (_, stab) = orbit_stabilizer(&action, rep_bits as usize, ENUMERATION_BUDGET)?;
            ok &= stab.len() as u128 == stabilizer_order;
        }
        let isotropy_type = if middle {
            format!("S{}≀C2", n / 2 + 1)
        } else if m == n {
            format!("S{}", n + 1)
        } else {
            format!("S{}×S{}", m + 1, n - m)
        };
        records.push(OrbitRecord {
            representative: BitString::new(rep_bits, n)?.to_string(),
            m,
            size,
            middle,
            expected_size,
            stabilizer_order,
            expected_stabilizer_order: expected_stab,
            young_blocks,
            isotropy_type,
            enumerated,
            ok,
        });
    }
    let partition_ok = records.iter().map(|r| r.size).sum::<usize>() == 1 << n;
    let ok = partition_ok && records.iter().all(|r| r.ok);
    Ok(OrbitData { n, orbits: records, partition_ok, ok })
}

/// Largest `r` for the exhaustive middle-orbit check.
pub const MAX_MIDDLE_ORBIT_R: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct MiddleOrbitCertificate {
    pub r: usize,
    pub rho: String,
    pub fixes_middle: bool,
    pub involution: bool,
    /// `ρ τ_i ρ = (r+i, 2r+1)` as operators on every string, `i = 1..=r`.
    pub conjugates_tau: bool,
    /// `ρ s_i ρ = s_{r+i}` as operators, `i < r`.
    pub conjugates_places: bool,
    /// The two `S_{r+1}` factors, and `ρ` exchanges them.
    pub factors_swapped: bool,
    pub stabilizer_order: u128,
    pub expected_stabilizer_order: u128,
    pub ok: bool,
}

fn compose_ops(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&p| a[p as usize]).collect()
}

/// Exhaustive check of the middle isotropy group for `n = 2r + 1`.
pub fn middle_orbit_check(r: usize) -> Result<MiddleOrbitCertificate> {
    if !(1..=MAX_MIDDLE_ORBIT_R).contains(&r) {
        return Err(CoreError::InvalidInput(format!("r = {r} outside 1..={MAX_MIDDLE_ORBIT_R}")));
    }
    let n = 2 * r + 1;
    let images = ops(n)?;
    let rho = middle_orbit_rho(r)?;
    let rho_op = perm_operator(n, &images, &rho);
    let middle: u32 = ((1u32 << n) - 1) & !((1u32 << r) - 1);
    let identity: Vec<u32> = (0..1u32 << n).collect();
    let fixes_middle = rho_op[middle as usize] == middle;
    let involution = compose_ops(&rho_op, &rho_op) == identity;
    let mut conjugates_tau = true;
    for i in 1..=r {
        let tau: Vec<u32> = (0..1u32 << n)
            .map(|b| theorem12_operator(n, i, &BitString::new(b, n).expect("valid")).map(|s| s.bits()))
            .collect::<Result<_>>()?;
        let lhs = compose_ops(&rho_op, &compose_ops(&tau, &rho_op));
        let rhs = perm_operator(n, &images, &Perm::transposition(n + 1, r + i, 2 * r + 1)?);
        conjugates_tau &= lhs == rhs;
    }
    let mut conjugates_places = true;
    for i in 1..r {
        let lhs = compose_ops(&rho_op, &compose_ops(&images[i - 1], &rho_op));
        conjugates_places &= lhs == images[r + i - 1];
    }
    // first factor: places 1..r with n+1; second: places r+1..2r+1
    let first: Vec<usize> = (1..=r).chain([n + 1]).collect();
    let second: Vec<usize> = (r + 1..=n).collect();
    let moved: Vec<usize> = first.iter().map(|&i| rho.apply(i)).collect();
    let mut sorted = moved.clone();
    sorted.sort_unstable();
    let factors_swapped = sorted == second;
    let action = string_action(n)?;
    let (_, stab) = orbit_stabilizer(&action, middle as usize, ENUMERATION_BUDGET)?;
    let expected = 2 * factorial(r + 1).pow(2);
    let stabilizer_order = stab.len() as u128;
    let ok = fixes_middle && involution && conjugates_tau && conjugates_places && factors_swapped && stabilizer_order == expected;
    Ok(MiddleOrbitCertificate {
        r,
        rho: rho.to_string(),
        fixes_middle,
        involution,
        conjugates_tau,
        conjugates_places,
        factors_swapped,
        stabilizer_order,
        expected_stabilizer_order: expected,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_data_small() {
        let d2 = dn_orbit_data(2).unwrap();
        assert!(d2.ok, "{d2:?}");
        let d3 = dn_orbit_data(3).unwrap();
        assert!(d3.ok, "{d3:?}");
        let mid = d3.orbits.iter().find(|o| o.middle).unwrap();
        assert_eq!((mid.size, mid.stabilizer_order), (3, 8));
    }

    #[test]
    fn middle_orbit_small() {
        let c = middle_orbit_check(1).unwrap();
        assert!(c.ok, "{c:?}");
        assert_eq!(c.stabilizer_order, 8);
        assert_eq!(middle_orbit_check(2).unwrap().stabilizer_order, 72);
    }
}
