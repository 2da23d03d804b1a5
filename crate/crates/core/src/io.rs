//! Arrangement files. Each file names its format in a `"kind"` field:
//! `"lines"` for homogeneous integer line coordinates, `"wiring"` for a move
//! list.

use serde_json::Value;
use thiserror::Error;

use crate::geometry::{GeometryError, LineArrangement, LineFile};
use crate::wiring::{AllowableSequence, WiringError, WiringFile};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("arrangement file has no \"kind\" field")]
    MissingKind,
    #[error("unknown arrangement kind {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Wiring(#[from] WiringError),
}

#[derive(Debug, Clone)]
pub enum Arrangement {
    Lines(LineArrangement),
    Wiring(AllowableSequence),
}

impl Arrangement {
    pub fn kind(&self) -> &'static str {
        match self {
            Arrangement::Lines(_) => "lines",
            Arrangement::Wiring(_) => "wiring",
        }
    }

    pub fn n(&self) -> u32 {
        match self {
            Arrangement::Lines(l) => l.n(),
            Arrangement::Wiring(w) => w.n(),
        }
    }

    /// A wiring diagram of the arrangement; lines are swept first.
    pub fn to_wiring(&self) -> Result<AllowableSequence, GeometryError> {
        match self {
            Arrangement::Lines(l) => l.to_wiring(),
            Arrangement::Wiring(w) => Ok(w.clone()),
        }
    }
}

/// Parses and validates an arrangement file.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ParseError> {
    let value: Value = serde_json::from_str(text)?;
    let kind = value.get("kind").and_then(Value::as_str).ok_or(ParseError::MissingKind)?;
    match kind {
        "lines" => {
            let file: LineFile = serde_json::from_value(value)?;
            Ok(Arrangement::Lines(LineArrangement::try_from(file)?))
        }
        "wiring" => {
            let file: WiringFile = serde_json::from_value(value)?;
            let seq = AllowableSequence::from(file);
            seq.validate()?;
            Ok(Arrangement::Wiring(seq))
        }
        other => Err(ParseError::UnknownKind(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatches_on_kind() {
        let a = parse_arrangement(r#"{"kind":"lines","n":3,"lines":[[1,0,0],[0,1,0],[0,0,1]]}"#).unwrap();
        assert_eq!((a.kind(), a.n()), ("lines", 3));
        let w = parse_arrangement(
            r#"{"kind":"wiring","n":3,"moves":[{"pos":1,"len":2},{"pos":2,"len":2},{"pos":1,"len":2}]}"#,
        )
        .unwrap();
        assert_eq!((w.kind(), w.n()), ("wiring", 3));
        assert_eq!(w.to_wiring().unwrap().moves().len(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_arrangement("{"), Err(ParseError::Json(_))));
        assert!(matches!(parse_arrangement(r#"{"n":3}"#), Err(ParseError::MissingKind)));
        assert!(matches!(parse_arrangement(r#"{"kind":"circles"}"#), Err(ParseError::UnknownKind(_))));
        assert!(matches!(
            parse_arrangement(r#"{"kind":"wiring","n":3,"moves":[{"pos":1,"len":2}]}"#),
            Err(ParseError::Wiring(_))
        ));
        assert!(matches!(
            parse_arrangement(r#"{"kind":"lines","n":2,"lines":[[1,0,0],[1,0,0]]}"#),
            Err(ParseError::Geometry(_))
        ));
        assert!(matches!(
            parse_arrangement(r#"{"kind":"wiring","n":3,"moves":[],"extra":1}"#),
            Err(ParseError::Json(_))
        ));
    }
}
