use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use super::Formula;

/// Largest world count `find_model` enumerates.
pub const MAX_WORLDS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelSearchError {
    #[error("requested {requested} worlds but the cap is {MAX_WORLDS}")]
    CapExceeded { requested: usize },
}

/// A finite Kripke model for KD with a designated world. `access[w]` is
/// the successor bitset of world `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KdModel {
    pub worlds: usize,
    pub access: Vec<u64>,
    pub valuation: BTreeMap<String, u64>,
    pub world: usize,
}

impl KdModel {
    pub fn is_serial(&self) -> bool {
        self.access.iter().all(|&row| row != 0)
    }

    /// Worlds where `f` holds, as a bitset.
    pub fn eval(&self, f: &Formula) -> u64 {
        eval(f, self.worlds, &self.access, &|p| self.valuation.get(p).copied().unwrap_or(0))
    }

    pub fn holds(&self, f: &Formula) -> bool {
        self.eval(f) >> self.world & 1 == 1
    }
}

impl fmt::Display for KdModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |mask: u64| -> String {
            let v: Vec<String> = (0..self.worlds).filter(|w| mask >> w & 1 == 1).map(|w| format!("w{w}")).collect();
            format!("{{{}}}", v.join(", "))
        };
        writeln!(f, "worlds: {}", names((1u64 << self.worlds) - 1))?;
        for (w, &row) in self.access.iter().enumerate() {
            writeln!(f, "  w{w} -> {}", names(row))?;
        }
        for (p, &mask) in &self.valuation {
            writeln!(f, "  {p} true at {}", names(mask))?;
        }
        write!(f, "designated world: w{}", self.world)
    }
}

fn eval(f: &Formula, n: usize, access: &[u64], val: &dyn Fn(&str) -> u64) -> u64 {
    let all = (1u64 << n) - 1;
    match f {
        Formula::Prop(p) => val(p) & all,
        Formula::False => 0,
        Formula::Neg(a) => all & !eval(a, n, access, val),
        Formula::Impl(a, b) => all & (!eval(a, n, access, val) | eval(b, n, access, val)),
        Formula::Conj(a, b) => eval(a, n, access, val) & eval(b, n, access, val),
        Formula::Disj(a, b) => eval(a, n, access, val) | eval(b, n, access, val),
        Formula::Ob(a) => {
            let body = eval(a, n, access, val);
            (0..n).filter(|&w| access[w] & !body == 0).fold(0, |m, w| m | 1 << w)
        }
    }
}

/// Least model of at most `max_worlds` worlds with a world where every
/// formula holds. Models are ordered by world count, then access relation
/// (row 0 most significant), then valuation (props in name order), then
/// world. With `require_serial` off, non-serial relations are included,
/// which leaves plain K.
pub fn find_model(fs: &[Formula], max_worlds: usize, require_serial: bool) -> Result<Option<KdModel>, ModelSearchError> {
    if max_worlds > MAX_WORLDS {
        return Err(ModelSearchError::CapExceeded { requested: max_worlds });
    }
    let props: Vec<String> = fs.iter().flat_map(|f| f.props()).collect::<BTreeSet<_>>().into_iter().collect();
    for n in 1..=max_worlds {
        let rows: u64 = 1 << n;
        let first_row = u64::from(require_serial);
        let per_row = rows - first_row;
        let relations = per_row.pow(n as u32);
        let found = (0..relations).into_par_iter().find_map_first(|code| {
            let mut access = vec![0u64; n];
            let mut c = code;
            for w in (0..n).rev() {
                access[w] = first_row + c % per_row;
                c /= per_row;
            }
            let valuations = rows.pow(props.len() as u32);
            for vcode in 0..valuations {
                let mut masks = vec![0u64; props.len()];
                let mut c = vcode;
                for i in (0..props.len()).rev() {
                    masks[i] = c % rows;
                    c /= rows;
                }
                let val = |p: &str| props.binary_search_by(|q| q.as_str().cmp(p)).map(|i| masks[i]).unwrap_or(0);
                let common = fs.iter().fold((1u64 << n) - 1, |m, f| m & eval(f, n, &access, &val));
                if common != 0 {
                    return Some(KdModel {
                        worlds: n,
                        access,
                        valuation: props.iter().cloned().zip(masks).filter(|(_, m)| *m != 0).collect(),
                        world: common.trailing_zeros() as usize,
                    });
                }
            }
            None
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sdl::{parse_formula, parse_formula_list};

    #[test]
    fn single_obligation() {
        let m = find_model(&parse_formula_list("O(p)").unwrap(), 3, true).unwrap().unwrap();
        assert_eq!(m.worlds, 1);
        assert_eq!(m.access, [1]);
        assert_eq!(m.valuation["p"], 1);
    }

    #[test]
    fn conflicting_obligations_need_a_dead_end() {
        let fs = parse_formula_list("O(p); O(~p)").unwrap();
        assert_eq!(find_model(&fs, 3, true).unwrap(), None);
        let m = find_model(&fs, 3, false).unwrap().unwrap();
        assert!(!m.is_serial());
    }

    #[test]
    fn no_conflict_principle() {
        let nc = parse_formula("~(O(p) & O(~p))").unwrap();
        assert_eq!(find_model(&[Formula::neg(nc.clone())], 3, true).unwrap(), None);
        assert!(find_model(&[Formula::neg(nc)], 1, false).unwrap().is_some());
    }

    #[test]
    fn cap() {
        assert!(find_model(&[], 5, true).is_err());
    }
}
