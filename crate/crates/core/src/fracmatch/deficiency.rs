use crate::graph::Graph;

use super::FracMatchError;

pub const DEFAULT_BRUTE_CAP: usize = 20;

/// A maximiser `S` of `i(G - S) - |S|` together with the isolated set `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficiencyWitness {
    pub set_s: Vec<usize>,
    pub isolated_t: Vec<usize>,
    pub value: i64,
}

pub fn deficiency_bruteforce(g: &Graph) -> Result<DeficiencyWitness, FracMatchError> {
    deficiency_bruteforce_with_cap(g, DEFAULT_BRUTE_CAP)
}

/// Maximises `i(G - S) - |S|` over all `2^n` vertex subsets, including `S = {}`.
///
/// Ties go to the lexicographically smallest membership string `s_0 s_1 ... s_{n-1}`.
pub fn deficiency_bruteforce_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<DeficiencyWitness, FracMatchError> {
    let n = g.order();
    let cap = cap.min(63);
    if n > cap {
        return Err(FracMatchError::TooLarge { n, cap });
    }
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // membership string order == bit-reversed mask order
    let string_key = |mask: u64| {
        if n == 0 {
            0
        } else {
            mask.reverse_bits() >> (64 - n)
        }
    };

    let mut best: Option<(i64, u64)> = None;
    for mask in 0..=full {
        let isolated = (0..n)
            .filter(|&v| mask >> v & 1 == 0 && nbr[v] & !mask == 0)
            .count() as i64;
        let value = isolated - i64::from(mask.count_ones());
        let better = match best {
            None => true,
            Some((bv, bm)) => value > bv || (value == bv && string_key(mask) < string_key(bm)),
        };
        if better {
            best = Some((value, mask));
        }
        if mask == full {
            break;
        }
    }
    let (value, mask) = best.expect("at least the empty set");
    let set_s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    let isolated_t: Vec<usize> = (0..n)
        .filter(|&v| mask >> v & 1 == 0 && nbr[v] & !mask == 0)
        .collect();
    Ok(DeficiencyWitness {
        set_s,
        isolated_t,
        value,
    })
}
