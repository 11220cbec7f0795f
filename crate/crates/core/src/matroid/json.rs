//! `{"n": .., "rank": {key: int}, "multiplicity": {key: int}}` with every one of
//! the `2^n` subset keys present. Multiplicities are arbitrary-precision.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use super::{ArithmeticMatroid, Subset, MAX_GROUNDSET};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    n: usize,
    rank: BTreeMap<String, Value>,
    multiplicity: BTreeMap<String, Value>,
}

impl ArithmeticMatroid {
    pub fn to_json_value(&self) -> Value {
        let n = self.n;
        let mut rank = serde_json::Map::new();
        let mut multiplicity = serde_json::Map::new();
        for x in Subset::all(n) {
            rank.insert(x.key(), Value::from(self.rk(x)));
            let num = Number::from_str(&self.m(x).to_string()).expect("integer literal");
            multiplicity.insert(x.key(), Value::Number(num));
        }
        serde_json::json!({ "n": n, "rank": rank, "multiplicity": multiplicity })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MatroidJson = serde_json::from_str(text)?;
        let n = raw.n;
        if n > MAX_GROUNDSET {
            return Err(Error::GroundsetTooLarge(n));
        }
        let size = 1usize << n;
        let rank_big = table(&raw.rank, n, "rank")?;
        let mult = table(&raw.multiplicity, n, "multiplicity")?;
        let rank = rank_big
            .iter()
            .enumerate()
            .map(|(x, r)| {
                usize::try_from(r).map_err(|_| {
                    Error::Parse(format!("rank of {} must be a small non-negative integer", Subset(x as u32)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        debug_assert_eq!(rank.len(), size);
        ArithmeticMatroid::new(n, rank, mult)
    }
}

fn table(map: &BTreeMap<String, Value>, n: usize, what: &str) -> Result<Vec<BigInt>> {
    let mut out: Vec<Option<BigInt>> = vec![None; 1 << n];
    for (key, value) in map {
        let x = Subset::parse_key(key, n)?;
        let v = match value {
            Value::Number(num) => BigInt::from_str(&num.to_string()).ok(),
            _ => None,
        }
        .ok_or_else(|| Error::Parse(format!("{what}[\"{key}\"] is not an integer")))?;
        if out[x.bits()].replace(v).is_some() {
            return Err(Error::Parse(format!("duplicate {what} entry for {x}")));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| Error::Parse(format!("missing {what} entry for {}", Subset(x as u32)))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    #[test]
    fn round_trip() {
        let a = IntMatrix::from_rows(&[[1, 1, 1, -3], [0, 5, 0, -5], [0, 0, 5, -5]]);
        let m = ArithmeticMatroid::from_matrix(&a).unwrap();
        assert_eq!(ArithmeticMatroid::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn big_multiplicities_survive() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let m = ArithmeticMatroid::new(1, vec![0, 1], vec![BigInt::from(1), big.clone()]).unwrap();
        let back = ArithmeticMatroid::from_json(&m.to_json()).unwrap();
        assert_eq!(back.m(Subset::singleton(1)), &big);
    }

    #[test]
    fn missing_and_bad_keys() {
        let missing = r#"{"n":1,"rank":{"":0},"multiplicity":{"":1,"1":1}}"#;
        assert!(matches!(ArithmeticMatroid::from_json(missing), Err(Error::Parse(_))));
        let bad = r#"{"n":1,"rank":{"":0,"2":1},"multiplicity":{"":1,"1":1}}"#;
        assert!(ArithmeticMatroid::from_json(bad).is_err());
        let zero = r#"{"n":1,"rank":{"":0,"1":1},"multiplicity":{"":1,"1":0}}"#;
        assert!(matches!(ArithmeticMatroid::from_json(zero), Err(Error::InvalidMatroid(_))));
        let frac = r#"{"n":1,"rank":{"":0,"1":1},"multiplicity":{"":1,"1":1.5}}"#;
        assert!(ArithmeticMatroid::from_json(frac).is_err());
    }
}
