//! Total computable colourings of the positive integers.
//!
//! The staged 2-adic colouring assigns every positive integer a colour by
//! working through the residue classes `2^(n-1) mod 2^n`: each `m >= 1`
//! belongs to exactly one such class, namely `n = v2(m) + 1`. The first two
//! stages colour 1 and 2 red and the rest of their classes blue; from stage 3
//! on the whole class receives the colour opposite to the one its stage index
//! `n` already carries. The procedural stage-by-stage replay is kept as an
//! independent oracle in [`stage_simulation`].

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Nat;

/// A colour, stored as its index. The staged colouring uses
/// [`Colour::RED`] and [`Colour::BLUE`]; residue-table colourings may use any
/// number of colours. Serialized as the bare index (red 0, blue 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colour(pub u32);

impl Colour {
    pub const RED: Colour = Colour(0);
    pub const BLUE: Colour = Colour(1);

    pub fn index(self) -> u32 {
        self.0
    }

    /// The other colour of a 2-colouring.
    pub fn opposite(self) -> Colour {
        debug_assert!(self.0 < 2, "opposite is only defined for 2-colourings");
        Colour(1 - self.0)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Colour::RED => f.write_str("R"),
            Colour::BLUE => f.write_str("B"),
            Colour(n) => write!(f, "{n}"),
        }
    }
}

/// Exponent of the largest power of two dividing `m`; fails on `m = 0`.
pub fn two_adic_valuation(m: &Nat) -> Result<u64> {
    m.trailing_zeros()
        .ok_or_else(|| Error::InvalidArgument("2-adic valuation of 0 is undefined".into()))
}

/// Staged colour of `m >= 1`, u64 fast path.
pub fn staged_colour_u64(m: u64) -> Result<Colour> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "the staged colouring is defined on positive integers only".into(),
        ));
    }
    let n = u64::from(m.trailing_zeros()) + 1;
    Ok(match n {
        1 => {
            if m == 1 {
                Colour::RED
            } else {
                Colour::BLUE
            }
        }
        2 => {
            if m == 2 {
                Colour::RED
            } else {
                Colour::BLUE
            }
        }
        // For n >= 3 the whole class 2^(n-1) mod 2^n takes the colour
        // opposite to its stage index n. Terminates: n <= log2(m) + 1 < m.
        _ => staged_colour_u64(n)?.opposite(),
    })
}

/// Staged colour of `m >= 1`.
pub fn staged_colour(m: &Nat) -> Result<Colour> {
    if let Some(small) = m.to_u64() {
        return staged_colour_u64(small);
    }
    // huge m: its stage index v2(m) + 1 always fits in u64
    let n = two_adic_valuation(m)? + 1;
    Ok(match n {
        1 | 2 => Colour::BLUE, // m > 2, so never the exceptional member
        _ => staged_colour_u64(n)?.opposite(),
    })
}

/// Colour given to the generic (non-exceptional) members of the class
/// `2^(n-1) mod 2^n`: blue for the first two stages, otherwise the opposite
/// of the colour of the stage index itself.
pub fn class_colour(n: u64) -> Result<Colour> {
    match n {
        0 => Err(Error::InvalidArgument("stage index must be positive".into())),
        1 | 2 => Ok(Colour::BLUE),
        _ => Ok(staged_colour_u64(n)?.opposite()),
    }
}

/// Replay the colouring stages literally, in order, over `1..=value_limit`.
///
/// Stage 1 colours 1 red and the other odd numbers blue; stage 2 colours 2
/// red and the other numbers 2 mod 4 blue; stage `n >= 3` colours the class
/// `2^(n-1) mod 2^n` opposite to the colour `n` already received. Returns the
/// table indexed by `m - 1`, or an error if `stage_limit` stages leave some
/// value uncoloured.
pub fn stage_simulation(value_limit: u64, stage_limit: u64) -> Result<Vec<Colour>> {
    if value_limit == 0 {
        return Err(Error::InvalidArgument("value limit must be positive".into()));
    }
    let n_values = usize::try_from(value_limit)
        .map_err(|_| Error::LimitExceeded("value limit does not fit in memory".into()))?;
    let mut table: Vec<Option<Colour>> = vec![None; n_values];
    let mut set = |m: u64, colour: Colour| {
        table[(m - 1) as usize] = Some(colour);
    };

    for n in 1..=stage_limit {
        match n {
            1 => {
                let mut m = 1;
                while m <= value_limit {
                    set(m, if m == 1 { Colour::RED } else { Colour::BLUE });
                    m += 2;
                }
            }
            2 => {
                let mut m = 2;
                while m <= value_limit {
                    set(m, if m == 2 { Colour::RED } else { Colour::BLUE });
                    m += 4;
                }
            }
            _ => {
                if n - 1 >= 64 {
                    break; // class starts beyond any u64 value limit
                }
                let start = 1u64 << (n - 1);
                if start > value_limit {
                    continue; // class has no member in range
                }
                // the stage index n has already been coloured: n <= log2(limit)+1
                let of_n = table[(n - 1) as usize].expect("stage index coloured earlier");
                let step = 1u64 << n;
                let mut m = start;
                loop {
                    set(m, of_n.opposite());
                    match m.checked_add(step) {
                        Some(next) if next <= value_limit => m = next,
                        _ => break,
                    }
                }
            }
        }
    }

    table
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{} stages leave {} uncoloured; need at least log2({value_limit}) + 1",
                    stage_limit,
                    i + 1
                ))
            })
        })
        .collect()
}

/// Residue-class colouring with finitely many exceptional values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResidueTable {
    modulus: u64,
    table: Vec<Colour>,
    #[serde(default)]
    exceptions: Vec<ResidueException>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResidueException {
    #[serde(with = "crate::json::nat")]
    pub value: Nat,
    pub colour: Colour,
}

impl ResidueTable {
    pub fn new(modulus: u64, table: Vec<Colour>, exceptions: Vec<(Nat, Colour)>) -> Result<Self> {
        let rt = Self {
            modulus,
            table,
            exceptions: exceptions
                .into_iter()
                .map(|(value, colour)| ResidueException { value, colour })
                .collect(),
        };
        rt.validate()?;
        Ok(rt)
    }

    pub fn validate(&self) -> Result<()> {
        if self.modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        if self.table.len() as u64 != self.modulus {
            return Err(Error::InvalidArgument(format!(
                "table covers {} residues but the modulus is {}",
                self.table.len(),
                self.modulus
            )));
        }
        for (i, e) in self.exceptions.iter().enumerate() {
            if self.exceptions[..i].iter().any(|o| o.value == e.value) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate exception value {}",
                    e.value
                )));
            }
        }
        Ok(())
    }

    pub fn from_json_str(json: &str) -> Result<Self> {
        let rt: Self = serde_json::from_str(json)
            .map_err(|e| Error::InvalidArgument(format!("bad residue-table JSON: {e}")))?;
        rt.validate()?;
        Ok(rt)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("residue table serializes")
    }

    fn colour_of(&self, m: &Nat) -> Colour {
        for e in &self.exceptions {
            if e.value == *m {
                return e.colour;
            }
        }
        let residue = (m % Nat::from(self.modulus))
            .to_u64()
            .expect("residue below a u64 modulus");
        self.table[residue as usize]
    }
}

/// A total colouring of the positive integers.
#[derive(Debug, Clone)]
pub enum ColouringSpec {
    /// The staged 2-adic colouring.
    Staged2Adic,
    /// Colour by residue class, with listed exceptional values.
    ResidueTable(ResidueTable),
}

/// Colour of `m >= 1` under `spec`.
pub fn colour_of(spec: &ColouringSpec, m: &Nat) -> Result<Colour> {
    use num_traits::Zero;
    if m.is_zero() {
        return Err(Error::InvalidArgument(
            "colourings are defined on positive integers only".into(),
        ));
    }
    match spec {
        ColouringSpec::Staged2Adic => staged_colour(m),
        ColouringSpec::ResidueTable(rt) => Ok(rt.colour_of(m)),
    }
}
