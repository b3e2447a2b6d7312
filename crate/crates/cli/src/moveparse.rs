//! Parsing of `move --kind <kind> --at <spec>` location arguments.
//!
//! Per kind, `--at` is:
//!
//! * `sv`, `r1-`: an arrow index into the canonical arrow order, e.g. `0`
//! * `r2-`: two arrow indices, e.g. `0,2`
//! * `r3`: three arrow indices, e.g. `0,1,2` (roles are detected)
//! * `oc`: `<strand>.<pos>`, the lower of the two adjacent tails
//! * `r1+`: `<strand>.<pos>,<+|->,<th|ht>` (`th`: tail below head)
//! * `r2+`: `t=<strand>.<pos>,h=<strand>.<pos>,<+|->,<par|cross>`

use linkhom_core::gauss::{MoveKind, MoveSpec};
use linkhom_core::word::Sign;

use crate::CliError;

fn bad(at: &str, kind: MoveKind, expected: &str) -> CliError {
    CliError::new(
        6,
        format!("bad --at `{at}` for kind `{kind}`: expected {expected}"),
    )
}

fn parse_slot(tok: &str) -> Option<(usize, usize)> {
    let (s, p) = tok.split_once('.')?;
    let strand = s.parse().ok().filter(|&v: &usize| v > 0)?;
    let pos = p.parse().ok().filter(|&v: &usize| v > 0)?;
    Some((strand, pos))
}

fn parse_sign_tok(tok: &str) -> Option<Sign> {
    match tok {
        "+" => Some(Sign::Plus),
        "-" => Some(Sign::Minus),
        _ => None,
    }
}

pub fn parse_move(kind: MoveKind, at: &str) -> Result<MoveSpec, CliError> {
    let at = at.trim();
    match kind {
        MoveKind::Sv | MoveKind::R1Delete => {
            let arrow: usize = at.parse().map_err(|_| bad(at, kind, "one arrow index"))?;
            Ok(match kind {
                MoveKind::Sv => MoveSpec::SvDelete { arrow },
                _ => MoveSpec::R1Delete { arrow },
            })
        }
        MoveKind::R2Delete => {
            let parts: Vec<&str> = at.split(',').collect();
            let expected = "two arrow indices `i,j`";
            if parts.len() != 2 {
                return Err(bad(at, kind, expected));
            }
            let first = parts[0]
                .trim()
                .parse()
                .map_err(|_| bad(at, kind, expected))?;
            let second = parts[1]
                .trim()
                .parse()
                .map_err(|_| bad(at, kind, expected))?;
            Ok(MoveSpec::R2Delete { first, second })
        }
        MoveKind::R3 => {
            let parts: Vec<&str> = at.split(',').collect();
            let expected = "three arrow indices `i,j,k`";
            if parts.len() != 3 {
                return Err(bad(at, kind, expected));
            }
            let mut ids = [0usize; 3];
            for (slot, part) in ids.iter_mut().zip(&parts) {
                *slot = part.trim().parse().map_err(|_| bad(at, kind, expected))?;
            }
            Ok(MoveSpec::R3 {
                first: ids[0],
                second: ids[1],
                third: ids[2],
            })
        }
        MoveKind::Oc => {
            let (strand, lower_pos) =
                parse_slot(at).ok_or_else(|| bad(at, kind, "`<strand>.<pos>`"))?;
            Ok(MoveSpec::OcSwap { strand, lower_pos })
        }
        MoveKind::R1Insert => {
            let expected = "`<strand>.<pos>,<+|->,<th|ht>`";
            let parts: Vec<&str> = at.split(',').collect();
            if parts.len() != 3 {
                return Err(bad(at, kind, expected));
            }
            let (strand, pos) =
                parse_slot(parts[0].trim()).ok_or_else(|| bad(at, kind, expected))?;
            let sign = parse_sign_tok(parts[1].trim()).ok_or_else(|| bad(at, kind, expected))?;
            let tail_first = match parts[2].trim() {
                "th" => true,
                "ht" => false,
                _ => return Err(bad(at, kind, expected)),
            };
            Ok(MoveSpec::R1Insert {
                strand,
                at: pos,
                sign,
                tail_first,
            })
        }
        MoveKind::R2Insert => {
            let expected = "`t=<strand>.<pos>,h=<strand>.<pos>,<+|->,<par|cross>`";
            let parts: Vec<&str> = at.split(',').collect();
            if parts.len() != 4 {
                return Err(bad(at, kind, expected));
            }
            let tail = parts[0]
                .trim()
                .strip_prefix("t=")
                .and_then(parse_slot)
                .ok_or_else(|| bad(at, kind, expected))?;
            let head = parts[1]
                .trim()
                .strip_prefix("h=")
                .and_then(parse_slot)
                .ok_or_else(|| bad(at, kind, expected))?;
            let sign = parse_sign_tok(parts[2].trim()).ok_or_else(|| bad(at, kind, expected))?;
            let crossed = match parts[3].trim() {
                "par" => false,
                "cross" => true,
                _ => return Err(bad(at, kind, expected)),
            };
            Ok(MoveSpec::R2Insert {
                tail_strand: tail.0,
                tail_at: tail.1,
                head_strand: head.0,
                head_at: head.1,
                sign,
                crossed,
            })
        }
    }
}
