//! Direct enumeration of the graph and lattice-path objects behind the
//! secant-count generating function: spanning trees of the complete graph
//! with indegree weights, admissible indegree tuples (Dyck-path counts),
//! and the certifying binomial-sum identity.
//!
//! Trees are enumerated through Prüfer sequences, so the cost is exactly
//! d^{d-2} decodes; edges are oriented from the lower to the higher index.
//!
//! Two distinct counts live side by side here and must not be conflated:
//! K_d has d^{d-2} spanning trees, while the admissible indegree *tuples*
//! (the Dyck-path objects) number only C_{d-1} — e.g. K_3 has 3 trees but
//! 2 admissible tuples. The weighted tree sum (2d-2)!/d! equals
//! C_{d-1} (d-1)!, the tuple count times the average class weight.

use crate::exact::{binomial_int, factorial, rat, Rational};
use crate::Error;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Cap on complete-graph enumeration (d^{d-2} trees).
pub const TREE_ENUM_CAP: usize = 9;

/// The n-th Catalan number binom(2n, n)/(n + 1).
pub fn catalan(n: u64) -> Rational {
    binomial_int(2 * n as i64, n) / rat(n as i64 + 1)
}

/// Indegree tuple (i_1, ..., i_{d-1}) at vertices v_2, ..., v_d; the first
/// vertex always has indegree 0 under the low-to-high orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndegreeTuple(pub Vec<u32>);

impl IndegreeTuple {
    /// Admissible means every partial sum satisfies i_1 + ... + i_j <= j.
    pub fn is_admissible(&self) -> bool {
        let mut sum = 0u64;
        for (j, &i) in self.0.iter().enumerate() {
            sum += i as u64;
            if sum > j as u64 + 1 {
                return false;
            }
        }
        true
    }

    /// The partition obtained by discarding zeros and sorting decreasingly.
    pub fn partition(&self) -> Partition {
        let mut parts: Vec<u32> = self.0.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

/// A partition written as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition(parts)
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts, k = sum of the multiplicities.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicities e_i of the distinct parts, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The tuple with the parts in place, padded with zeros to `len`.
    pub fn padded_tuple(&self, len: usize) -> IndegreeTuple {
        assert!(len >= self.len());
        let mut v: Vec<u32> = self.0.clone();
        v.resize(len, 0);
        IndegreeTuple(v)
    }
}

/// All partitions of n, in a deterministic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn check_tree_cap(d: usize) -> Result<(), Error> {
    if !(2..=TREE_ENUM_CAP).contains(&d) {
        return Err(Error::CapExceeded {
            what: "tree enumeration d",
            requested: d,
            cap: TREE_ENUM_CAP,
            hint: "complete-graph enumeration costs d^{d-2} trees",
        });
    }
    Ok(())
}

/// Decode a Prüfer sequence over 0..d into the tree's edge list.
fn prufer_to_edges(seq: &[usize], d: usize, edges: &mut Vec<(usize, usize)>) {
    edges.clear();
    let mut degree = vec![1u32; d];
    for &s in seq {
        degree[s] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(d - 1), leaf.max(d - 1)));
}

/// Visit every labeled spanning tree of K_d once, handing the callback the
/// indegree tuple at vertices v_2, ..., v_d under the low-to-high edge
/// orientation.
fn for_each_tree_indegrees(d: usize, mut visit: impl FnMut(&[u32])) {
    let mut seq = vec![0usize; d.saturating_sub(2)];
    let mut edges = Vec::with_capacity(d - 1);
    let mut indeg = vec![0u32; d];
    loop {
        prufer_to_edges(&seq, d, &mut edges);
        indeg.iter_mut().for_each(|x| *x = 0);
        for &(_, hi) in &edges {
            indeg[hi] += 1;
        }
        visit(&indeg[1..]);
        // odometer over the d^{d-2} sequences
        let mut pos = 0;
        loop {
            if pos == seq.len() {
                return;
            }
            seq[pos] += 1;
            if seq[pos] < d {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}

/// Sum over all spanning trees of K_d of the weight
/// prod_{j=2}^{d} indeg(v_j)!. Equals (2d-2)!/d!.
pub fn spanning_tree_weight_sum(d: usize) -> Result<Rational, Error> {
    check_tree_cap(d)?;
    let mut sum = Rational::zero();
    for_each_tree_indegrees(d, |indeg| {
        let mut w = Rational::one();
        for &i in indeg {
            if i > 1 {
                w *= factorial(i as u64);
            }
        }
        sum += w;
    });
    Ok(sum)
}

/// Number of spanning trees of K_d (Cayley count d^{d-2} by enumeration).
pub fn spanning_tree_count(d: usize) -> Result<u64, Error> {
    check_tree_cap(d)?;
    let mut count = 0u64;
    for_each_tree_indegrees(d, |_| count += 1);
    Ok(count)
}

/// Number of spanning trees of K_d grouped by the partition of the
/// indegree tuple (zeros discarded).
pub fn indegree_partition_census(d: usize) -> Result<BTreeMap<Partition, u64>, Error> {
    check_tree_cap(d)?;
    let mut census: BTreeMap<Partition, u64> = BTreeMap::new();
    for_each_tree_indegrees(d, |indeg| {
        let partition = IndegreeTuple(indeg.to_vec()).partition();
        *census.entry(partition).or_insert(0) += 1;
    });
    Ok(census)
}

/// Count the admissible permutations of a tuple by direct enumeration of
/// its distinct rearrangements.
pub fn phi_count(t: &IndegreeTuple) -> Rational {
    let len = t.0.len();
    let mut remaining: BTreeMap<u32, u32> = BTreeMap::new();
    for &x in &t.0 {
        *remaining.entry(x).or_insert(0) += 1;
    }
    fn rec(
        remaining: &mut BTreeMap<u32, u32>,
        placed: usize,
        len: usize,
        partial_sum: u64,
        count: &mut u64,
    ) {
        if placed == len {
            *count += 1;
            return;
        }
        let values: Vec<u32> = remaining
            .iter()
            .filter(|&(_, &e)| e > 0)
            .map(|(&v, _)| v)
            .collect();
        for v in values {
            // partial sums must stay at or below the position index
            if partial_sum + v as u64 > placed as u64 + 1 {
                continue;
            }
            *remaining.get_mut(&v).unwrap() -= 1;
            rec(remaining, placed + 1, len, partial_sum + v as u64, count);
            *remaining.get_mut(&v).unwrap() += 1;
        }
    }
    let mut count = 0u64;
    rec(&mut remaining, 0, len, 0, &mut count);
    rat(count as i64)
}

/// Closed form for the number of admissible permutations:
/// (d-1)! / ((d-k)! e_1! ... e_l!) for the partition of the tuple's
/// nonzero content, where k is the number of parts.
pub fn phi_formula(lambda: &Partition, d: usize) -> Rational {
    let k = lambda.len();
    assert!(k < d, "partition has more parts than slots");
    let mut denom = factorial((d - k) as u64);
    for (_, e) in lambda.multiplicities() {
        denom *= factorial(e as u64);
    }
    factorial(d as u64 - 1) / denom
}

/// Number of spanning trees of K_d whose indegree tuple at v_2, ..., v_d is
/// a permutation of `lambda` padded with zeros, by direct enumeration.
/// (Tree indegree tuples satisfy the partial-sum constraint automatically.)
pub fn a_lambda_count(lambda: &Partition, d: usize) -> Result<Rational, Error> {
    check_tree_cap(d)?;
    assert_eq!(lambda.weight(), d as u64 - 1, "partition must have weight d - 1");
    let census = indegree_partition_census(d)?;
    Ok(rat(census.get(lambda).copied().unwrap_or(0) as i64))
}

/// Closed form for the same count:
/// (d-1)!/((d-k)! e_1! ... e_l!) * (d-1)!/(lambda_1!^{e_1} ... lambda_l!^{e_l}).
pub fn a_lambda_formula(lambda: &Partition, d: usize) -> Rational {
    assert_eq!(lambda.weight(), d as u64 - 1, "partition must have weight d - 1");
    let mut second_denom = Rational::one();
    for (part, e) in lambda.multiplicities() {
        let pf = factorial(part as u64);
        for _ in 0..e {
            second_denom *= &pf;
        }
    }
    phi_formula(lambda, d) * factorial(d as u64 - 1) / second_denom
}

/// Number of admissible tuples (i_1, ..., i_{d-1}) of nonnegative integers
/// summing to d - 1; equals the Catalan number C_{d-1}.
pub fn admissible_tuple_count(d: usize) -> u64 {
    assert!(d >= 2);
    fn rec(slot: usize, len: usize, placed: u64, total: u64, count: &mut u64) {
        if slot == len {
            if placed == total {
                *count += 1;
            }
            return;
        }
        // the partial-sum constraint caps what this slot can take
        let cap = (slot as u64 + 1 - placed).min(total - placed);
        for v in 0..=cap {
            rec(slot + 1, len, placed + v, total, count);
        }
    }
    let mut count = 0;
    rec(0, d - 1, 0, d as u64 - 1, &mut count);
    count
}

/// The certifying identity
/// 1 = sum_i (n/(i+1) - n/(i+2) + 2) n! i! / (n+1+i)! binom(n-2, i),
/// checked by exact evaluation of the finite sum (0 <= i <= n-2).
pub fn wz_identity_check(n: u64) -> bool {
    assert!(n >= 2, "the identity is stated for n >= 2");
    let mut sum = Rational::zero();
    for i in 0..=n - 2 {
        let weight =
            rat(n as i64) / rat(i as i64 + 1) - rat(n as i64) / rat(i as i64 + 2) + rat(2);
        let ratio = factorial(n) * factorial(i) / factorial(n + 1 + i);
        sum += weight * ratio * binomial_int(n as i64 - 2, i);
    }
    sum.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorial_int;
    use num_rational::BigRational;

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), rat(1));
        assert_eq!(catalan(3), rat(5));
        assert_eq!(catalan(5), rat(42));
    }

    #[test]
    fn tree_weight_sums_match_closed_form() {
        assert_eq!(spanning_tree_weight_sum(2).unwrap(), rat(1));
        assert_eq!(spanning_tree_weight_sum(3).unwrap(), rat(4));
        assert_eq!(spanning_tree_weight_sum(4).unwrap(), rat(30));
        for d in 2..=7usize {
            let expect = BigRational::new(
                factorial_int(2 * d as u64 - 2),
                factorial_int(d as u64),
            );
            assert_eq!(spanning_tree_weight_sum(d).unwrap(), expect, "d = {}", d);
        }
    }

    #[test]
    fn cayley_counts() {
        for d in 2..=7usize {
            assert_eq!(
                spanning_tree_count(d).unwrap(),
                (d as u64).pow(d as u32 - 2),
                "d = {}",
                d
            );
        }
    }

    #[test]
    fn weight_sum_is_catalan_times_factorial() {
        // (2d-2)!/d! = C_{d-1} (d-1)!
        for d in 2..=8u64 {
            let lhs = factorial(2 * d - 2) / factorial(d);
            assert_eq!(lhs, catalan(d - 1) * factorial(d - 1));
        }
    }

    #[test]
    fn admissibility() {
        assert!(IndegreeTuple(vec![1, 0, 2]).is_admissible());
        assert!(!IndegreeTuple(vec![2, 1, 0]).is_admissible());
        assert!(IndegreeTuple(vec![0, 2, 1]).is_admissible());
    }

    #[test]
    fn phi_enumeration_examples() {
        // (2,1,0) has admissible rearrangements (1,0,2), (0,1,2), (0,2,1).
        assert_eq!(phi_count(&IndegreeTuple(vec![2, 1, 0])), rat(3));
        // all-ones tuple: the single arrangement.
        assert_eq!(phi_count(&IndegreeTuple(vec![1, 1, 1, 1])), rat(1));
        // (0,...,0,d-1): one admissible placement, in the last slot.
        assert_eq!(phi_count(&IndegreeTuple(vec![0, 0, 0, 4])), rat(1));
    }

    #[test]
    fn phi_formula_matches_enumeration() {
        for d in 2..=8usize {
            for lambda in partitions_of(d as u32 - 1) {
                if lambda.len() > d - 1 {
                    continue;
                }
                let tuple = lambda.padded_tuple(d - 1);
                assert_eq!(
                    phi_count(&tuple),
                    phi_formula(&lambda, d),
                    "d = {}, lambda = {:?}",
                    d,
                    lambda
                );
            }
        }
    }

    #[test]
    fn a_lambda_examples() {
        let all_ones = Partition::new(vec![1, 1, 1]);
        assert_eq!(a_lambda_count(&all_ones, 4).unwrap(), rat(6));
        assert_eq!(a_lambda_formula(&all_ones, 4), rat(6));
        for d in 2..=6usize {
            let star = Partition::new(vec![d as u32 - 1]);
            assert_eq!(a_lambda_count(&star, d).unwrap(), rat(1), "star into one vertex");
            assert_eq!(a_lambda_formula(&star, d), rat(1));
        }
    }

    #[test]
    fn a_lambda_formula_matches_census() {
        for d in 2..=7usize {
            let census = indegree_partition_census(d).unwrap();
            for lambda in partitions_of(d as u32 - 1) {
                if lambda.len() > d - 1 {
                    continue;
                }
                let counted = rat(census.get(&lambda).copied().unwrap_or(0) as i64);
                assert_eq!(
                    counted,
                    a_lambda_formula(&lambda, d),
                    "d = {}, lambda = {:?}",
                    d,
                    lambda
                );
            }
        }
    }

    #[test]
    fn census_weights_recover_weight_sum() {
        // sum over partitions of (count * prod part!^e) is the tree weight sum.
        for d in 2..=7usize {
            let mut acc = Rational::zero();
            for (lambda, count) in indegree_partition_census(d).unwrap() {
                let mut w = Rational::one();
                for (part, e) in lambda.multiplicities() {
                    let pf = factorial(part as u64);
                    for _ in 0..e {
                        w *= &pf;
                    }
                }
                acc += rat(count as i64) * w;
            }
            assert_eq!(acc, spanning_tree_weight_sum(d).unwrap(), "d = {}", d);
        }
    }

    #[test]
    fn admissible_tuples_are_counted_by_catalan() {
        // 3 trees on K_3 but only C_2 = 2 admissible tuples.
        assert_eq!(admissible_tuple_count(3), 2);
        for d in 2..=9usize {
            assert_eq!(
                rat(admissible_tuple_count(d) as i64),
                catalan(d as u64 - 1),
                "d = {}",
                d
            );
        }
    }

    #[test]
    fn wz_identity_small_and_batch() {
        assert!(wz_identity_check(2));
        assert!(wz_identity_check(3));
        for n in 2..=50 {
            assert!(wz_identity_check(n), "n = {}", n);
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        assert!(matches!(
            spanning_tree_weight_sum(TREE_ENUM_CAP + 1),
            Err(Error::CapExceeded { .. })
        ));
    }
}
