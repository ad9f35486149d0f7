use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{count_chain_polytope_points, count_kekule_matchings, count_order_ideals, OracleError, KEKULE_MAX_M};
use crate::permstats::Orientation;
use crate::posets::{order_poly_value, zigzag_poset, Labeling};
use crate::zigzag::omega_table;

/// Brute-force P-partition enumeration is skipped above this many objects;
/// the crosscheck refuses such instances.
pub const MAX_BRUTE_COUNT: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteValue {
    pub route: String,
    /// Exact decimal.
    pub value: String,
}

/// Every route's count of `Ω_n(m+1)` and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: usize,
    pub m: usize,
    pub routes: Vec<RouteValue>,
    /// The common value when all routes agree.
    pub agreed: Option<String>,
}

/// Run the three models, the two brute-force P-partition enumerations and
/// the recurrence table on one instance.
pub fn oracle_crosscheck(n: usize, m: usize) -> Result<OracleReport, OracleError> {
    let table_value = omega_table(n, m + 1).expect("omega routes agree").get(n, m + 1).clone();
    if table_value > BigInt::from(MAX_BRUTE_COUNT) {
        return Err(OracleError::TooLarge {
            n,
            m,
            limit: format!(
                "brute-force enumeration capped at {MAX_BRUTE_COUNT} P-partitions, instance has {table_value}"
            ),
        });
    }
    if m > KEKULE_MAX_M {
        return Err(OracleError::TooLarge { n, m, limit: format!("matching counter accepts m <= {KEKULE_MAX_M}") });
    }
    let natural = zigzag_poset(n, Orientation::UpDown, Labeling::Natural);
    let plain = zigzag_poset(n, Orientation::UpDown, Labeling::Plain);
    let values: Vec<(&str, BigInt)> = vec![
        ("order-ideals", count_order_ideals(n, m)),
        ("chain-polytope", count_chain_polytope_points(n, m)),
        ("kekule", count_kekule_matchings(n, m)?),
        ("p-partitions", order_poly_value(&natural, 0, m + 1)),
        ("relaxed-p-partitions", order_poly_value(&plain, 1, m + 1)),
        ("recurrence", table_value),
    ];
    let agreed = values.windows(2).all(|w| w[0].1 == w[1].1).then(|| values[0].1.to_string());
    let routes = values.into_iter().map(|(r, v)| RouteValue { route: r.to_string(), value: v.to_string() }).collect();
    Ok(OracleReport { n, m, routes, agreed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(oracle_crosscheck(5, 3).unwrap().agreed.as_deref(), Some("246"));
        assert_eq!(oracle_crosscheck(6, 4).unwrap().agreed.as_deref(), Some("2353"));
        for m in 1..=9 {
            assert_eq!(oracle_crosscheck(1, m).unwrap().agreed, Some((m + 1).to_string()));
        }
        let r = oracle_crosscheck(7, 5).unwrap();
        assert_eq!(r.agreed.as_deref(), Some("26585"));
        assert_eq!(r.routes.len(), 6);
    }

    #[test]
    fn refuses_large_instances() {
        assert!(matches!(oracle_crosscheck(12, 10), Err(OracleError::TooLarge { .. })));
    }
}
