//! JSON reading and writing of shapes and results.

use std::fs::File;
use std::io::{self, BufReader, Read};
use std::path::Path;

use unit_shapes_core::Shape;

use crate::CliError;

/// Parses a shape document: `{"pieces": [{"kind": "line_segment", ...}, ...]}`.
/// Pieces are validated and oriented counter-clockwise on load.
pub fn shape_from_reader(reader: impl Read) -> Result<Shape, CliError> {
    Ok(serde_json::from_reader(reader)?)
}

pub fn shape_from_str(s: &str) -> Result<Shape, CliError> {
    Ok(serde_json::from_str(s)?)
}

/// Reads a shape from a file, or from stdin when `path` is `-`.
pub fn load_shape(path: &Path) -> Result<Shape, CliError> {
    if path == Path::new("-") {
        shape_from_reader(io::stdin().lock())
    } else {
        shape_from_reader(BufReader::new(File::open(path)?))
    }
}

pub fn shape_to_json(shape: &Shape) -> Result<String, CliError> {
    Ok(serde_json::to_string(shape)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use unit_shapes_core::Point;

    #[test]
    fn round_trip() {
        let s = Shape::ellipse(Point::new(1.0, -2.0), 3.0, 1.5, 0.25).unwrap();
        let text = shape_to_json(&s).unwrap();
        let back = shape_from_str(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn open_chain_rejected() {
        let text = r#"{"pieces":[{"kind":"line_segment","start":{"x":0,"y":0},"end":{"x":1,"y":0}},
            {"kind":"line_segment","start":{"x":1,"y":0},"end":{"x":1,"y":1}}]}"#;
        assert!(shape_from_str(text).is_err());
    }
}
