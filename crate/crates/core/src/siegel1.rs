//! Dimensions of Siegel cusp forms of degree two and level one with weight
//! `det^k Sym(j)`, read off generating functions for `j` in `{0, 2, 4}`.
//! Other even `j` can be supplied as explicit tables.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactmath::{big_to_i64, Poly, RationalGF};

const LEVEL1_DENOM: [u32; 4] = [4, 6, 10, 12];

const NUMERATORS: [(i64, &str); 3] = [
    (0, "t^10 + t^12 - t^22 + t^35"),
    (
        2,
        "t^14 + 2t^16 + t^18 + t^22 - t^26 - t^28 + t^21 + t^23 + t^27 + t^29 - t^33",
    ),
    (
        4,
        "t^10 + t^12 + t^14 + t^15 + t^16 + t^17 + t^18 + t^19 + t^20 + t^21 + t^23 - t^30",
    ),
];

/// Weights below this bound are served from a precomputed expansion.
const CACHE_LEN: usize = 512;

/// Generating function `sum_k dim S_{k,j}(Sp(2,Z)) t^k` for `j` in `{0, 2, 4}`.
pub fn level1_series(j: i64) -> Result<RationalGF> {
    let (_, num) = NUMERATORS
        .iter()
        .find(|(jj, _)| *jj == j)
        .ok_or(Error::UnsupportedJ(j))?;
    Ok(RationalGF::new(num.parse::<Poly>()?, LEVEL1_DENOM.to_vec()))
}

fn cached(j: i64) -> Option<&'static [i64]> {
    static CACHE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        NUMERATORS
            .iter()
            .map(|(j, _)| {
                level1_series(*j)
                    .expect("built-in series")
                    .series_coeffs(CACHE_LEN)
                    .iter()
                    .map(|c| big_to_i64(c).expect("small coefficient"))
                    .collect()
            })
            .collect()
    });
    NUMERATORS
        .iter()
        .position(|(jj, _)| *jj == j)
        .map(|i| all[i].as_slice())
}

fn builtin(k: i64, j: i64) -> Result<i64> {
    if k < 0 {
        return Ok(0);
    }
    let coeffs = cached(j).ok_or(Error::UnsupportedJ(j))?;
    match coeffs.get(k as usize) {
        Some(&v) => Ok(v),
        None => big_to_i64(&level1_series(j)?.coefficient(k as usize)),
    }
}

/// `dim S_{k,j}(Sp(2,Z))` for `j` in `{0, 2, 4}`.
pub fn dim_cusp_sp4(k: i64, j: i64) -> Result<i64> {
    builtin(k, j)
}

/// Level-one dimensions: the built-in series plus tables registered for
/// further even `j >= 6`. Each `j` may be registered once.
#[derive(Clone, Debug, Default)]
pub struct Level1Tables {
    extra: BTreeMap<i64, BTreeMap<i64, i64>>,
}

impl Level1Tables {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, j: i64, dims: BTreeMap<i64, i64>) -> Result<()> {
        if j < 6 || j % 2 != 0 {
            return Err(Error::UnsupportedJ(j));
        }
        if self.extra.contains_key(&j) {
            return Err(Error::AlreadyRegistered(j));
        }
        self.extra.insert(j, dims);
        Ok(())
    }

    /// Reads records `{"j": .., "k": .., "dim": ..}` from a JSON array and
    /// registers one table per `j`.
    pub fn register_json(&mut self, text: &str) -> Result<()> {
        #[derive(serde::Deserialize)]
        struct Row {
            j: i64,
            k: i64,
            dim: i64,
        }
        let rows: Vec<Row> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut grouped: BTreeMap<i64, BTreeMap<i64, i64>> = BTreeMap::new();
        for r in rows {
            grouped.entry(r.j).or_default().insert(r.k, r.dim);
        }
        for (j, dims) in grouped {
            self.register(j, dims)?;
        }
        Ok(())
    }

    pub fn dim_cusp_sp4(&self, k: i64, j: i64) -> Result<i64> {
        match self.extra.get(&j) {
            Some(table) => table.get(&k).copied().ok_or(Error::MissingData(j, k)),
            None => builtin(k, j),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_values() {
        assert_eq!(dim_cusp_sp4(10, 0).unwrap(), 1);
        assert_eq!(dim_cusp_sp4(35, 0).unwrap(), 1);
        assert_eq!(dim_cusp_sp4(13, 0).unwrap(), 0);
        assert_eq!(dim_cusp_sp4(14, 2).unwrap(), 1);
        for k in 3..=9 {
            assert_eq!(dim_cusp_sp4(k, 0).unwrap(), 0);
        }
        assert_eq!(dim_cusp_sp4(5, 6), Err(Error::UnsupportedJ(6)));
    }

    #[test]
    fn beyond_cache_matches_direct_expansion() {
        let k = CACHE_LEN as i64 + 7;
        let direct = level1_series(0).unwrap().coefficient(k as usize);
        assert_eq!(dim_cusp_sp4(k, 0).unwrap(), big_to_i64(&direct).unwrap());
    }

    #[test]
    fn registry() {
        let mut t = Level1Tables::new();
        t.register(6, BTreeMap::new()).unwrap();
        assert_eq!(t.dim_cusp_sp4(8, 6), Err(Error::MissingData(6, 8)));
        assert_eq!(t.register(6, BTreeMap::new()), Err(Error::AlreadyRegistered(6)));
        t.register(8, BTreeMap::from([(8, 3)])).unwrap();
        assert_eq!(t.dim_cusp_sp4(8, 8).unwrap(), 3);
        assert_eq!(t.register(4, BTreeMap::new()), Err(Error::UnsupportedJ(4)));
        assert_eq!(t.dim_cusp_sp4(10, 0).unwrap(), 1);
        let mut u = Level1Tables::new();
        u.register_json(r#"[{"j": 10, "k": 12, "dim": 2}]"#).unwrap();
        assert_eq!(u.dim_cusp_sp4(12, 10).unwrap(), 2);
    }
}
