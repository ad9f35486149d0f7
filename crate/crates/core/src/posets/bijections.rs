//! Elementwise checks of the correspondences between linear extensions,
//! alternating permutations and P-partitions of the zig-zag posets.

use std::collections::HashSet;

use super::{linear_extensions, natural_relabeling, r_relaxed_partitions, zigzag_poset, Labeling};
use crate::permstats::{alternating_perms, is_alternating, Orientation, Permutation};

/// For `P = sigma Z_n` (or `sigma Zbar_n` when `orientation` is down-up),
/// `pi` is a linear extension iff `pi^{-1} sigma` is alternating of that
/// orientation. Scans all of `S_n`; returns the first counterexample.
pub fn check_extension_alternating_correspondence(
    sigma: &Permutation,
    orientation: Orientation,
) -> Result<(), Permutation> {
    let n = sigma.len();
    let p = zigzag_poset(n, orientation, Labeling::Plain).relabel(sigma);
    for pi in Permutation::all(n) {
        let u = pi.inverse().compose(sigma);
        if p.is_linear_extension(&pi) != is_alternating(&u, orientation) {
            return Err(pi);
        }
    }
    Ok(())
}

/// `pi -> pi^{-1} eps` maps the linear extensions of the naturally labeled
/// up-down zig-zag bijectively onto the up-down permutations, carrying
/// descents to big returns. Returns the first offending extension.
pub fn check_descent_return_bijection(n: usize) -> Result<(), Permutation> {
    let eps = natural_relabeling(n, Orientation::UpDown);
    let target: HashSet<Permutation> = alternating_perms(n, Orientation::UpDown).collect();
    let mut image = HashSet::new();
    for pi in linear_extensions(&zigzag_poset(n, Orientation::UpDown, Labeling::Natural)) {
        let u = pi.inverse().compose(&eps);
        if !target.contains(&u) || pi.descent_set_r(0) != u.return_set_r(1) || !image.insert(u) {
            return Err(pi);
        }
    }
    if image.len() == target.len() {
        Ok(())
    } else {
        Err(Permutation::identity(n))
    }
}

/// Big descents of `sigma` are ordinary descents of `eps sigma`.
pub fn check_big_descent_containment(sigma: &Permutation) -> bool {
    let eps = natural_relabeling(sigma.len(), Orientation::UpDown);
    sigma.descent_set_r(1).is_subset(&eps.compose(sigma).descent_set_r(0))
}

/// `f -> f o eps` maps the P-partitions of the naturally labeled up-down
/// zig-zag onto the relaxed P-partitions of the plain one.
pub fn check_relaxed_relabeling(n: usize, m: usize) -> bool {
    let eps = natural_relabeling(n, Orientation::UpDown);
    let image: HashSet<Vec<usize>> =
        r_relaxed_partitions(&zigzag_poset(n, Orientation::UpDown, Labeling::Natural), 0, m)
            .map(|f| (1..=n).map(|i| f.values[eps.at(i) - 1]).collect())
            .collect();
    let target: HashSet<Vec<usize>> =
        r_relaxed_partitions(&zigzag_poset(n, Orientation::UpDown, Labeling::Plain), 1, m).map(|f| f.values).collect();
    image == target
}

/// `f -> (i -> m + 1 - f(eps(o(i))))` maps the P-partitions of the naturally
/// labeled up-down zig-zag bijectively onto those of the naturally labeled
/// down-up zig-zag.
pub fn check_down_up_bijection(n: usize, m: usize) -> bool {
    let eps = natural_relabeling(n, Orientation::UpDown);
    let o = natural_relabeling(n, Orientation::DownUp);
    let source: Vec<Vec<usize>> = r_relaxed_partitions(&zigzag_poset(n, Orientation::UpDown, Labeling::Natural), 0, m)
        .map(|f| f.values)
        .collect();
    let image: HashSet<Vec<usize>> =
        source.iter().map(|f| (1..=n).map(|i| m + 1 - f[eps.at(o.at(i)) - 1]).collect()).collect();
    let target: HashSet<Vec<usize>> =
        r_relaxed_partitions(&zigzag_poset(n, Orientation::DownUp, Labeling::Natural), 0, m)
            .map(|f| f.values)
            .collect();
    image.len() == source.len() && image == target
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn extension_alternating_correspondence() {
        for n in 1..=8 {
            for sigma in [Permutation::identity(n), natural_relabeling(n, Orientation::UpDown)] {
                for o in [Orientation::UpDown, Orientation::DownUp] {
                    assert_eq!(check_extension_alternating_correspondence(&sigma, o), Ok(()), "n={n}");
                }
            }
        }
    }

    #[test]
    fn descent_return_bijection() {
        for n in 1..=8 {
            assert_eq!(check_descent_return_bijection(n), Ok(()), "n={n}");
        }
    }

    #[test]
    fn partition_bijections() {
        for n in 1..=7 {
            for m in 1..=5 {
                assert!(check_relaxed_relabeling(n, m), "relabel n={n} m={m}");
                assert!(check_down_up_bijection(n, m), "down-up n={n} m={m}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn big_descents_survive_relabeling(w in (1usize..12).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())) {
            prop_assert!(check_big_descent_containment(&Permutation::new(w).unwrap()));
        }
    }
}
