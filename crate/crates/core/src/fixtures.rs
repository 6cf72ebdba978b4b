//! Bundled matrices, validated on load.

use crate::code::FieldCode;
use crate::io::CodeFile;
use crate::weighing::WeighingMatrix;

pub const W6_4: &str = include_str!("../fixtures/w6_4.txt");
pub const H4: &str = include_str!("../fixtures/h4.txt");
pub const W14_9: &str = include_str!("../fixtures/w14_9.txt");
pub const GOLAY24: &str = include_str!("../fixtures/golay24.txt");

fn weighing(text: &str) -> WeighingMatrix {
    WeighingMatrix::parse(text).expect("bundled weighing matrix is valid")
}

/// Skew `W_{6,4}`.
pub fn w6_4() -> WeighingMatrix {
    weighing(W6_4)
}

/// Hadamard matrix of order 4.
pub fn h4() -> WeighingMatrix {
    weighing(H4)
}

/// Skew two-circulant `W_{14,9}`.
pub fn w14_9() -> WeighingMatrix {
    weighing(W14_9)
}

/// Binary extended Golay code `[24, 12, 8]` in systematic form.
pub fn golay24() -> FieldCode {
    match CodeFile::parse(GOLAY24).expect("bundled Golay file parses") {
        CodeFile::Field(c) => c,
        CodeFile::Ring(_) => unreachable!("Golay fixture is a field code"),
    }
}
