//! Named example matrices used throughout the tests and by `gkzkit`.

use crate::lattice::GkzMatrix;

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub rows: &'static [&'static [i64]],
}

impl Fixture {
    pub fn matrix(&self) -> GkzMatrix {
        GkzMatrix::from_i64(self.rows)
    }

    /// Rows in the command-line syntax, e.g. `1 0 1; 0 1 1`.
    pub fn text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

pub const KUMMER: Fixture = Fixture { name: "kummer", rows: &[&[1, 0, 1], &[0, 1, 1]] };
pub const GAUSS: Fixture = Fixture { name: "gauss", rows: &[&[1, 1, 1, 1], &[1, 0, 0, 1], &[0, 1, 0, 1]] };
pub const CURVE_0134: Fixture = Fixture { name: "0134", rows: &[&[1, 1, 1, 1], &[0, 1, 3, 4]] };
pub const CURVE_012: Fixture = Fixture { name: "012", rows: &[&[1, 1, 1], &[0, 1, 2]] };
pub const TWISTED_CUBIC: Fixture = Fixture { name: "twisted-cubic", rows: &[&[1, 1, 1, 1], &[0, 1, 2, 3]] };
pub const FOUR_SLOPES: Fixture = Fixture { name: "four-slopes", rows: &[&[1, 0, 1, 2], &[0, 1, 1, 3]] };
pub const BELOW_CONE: Fixture = Fixture { name: "below-cone", rows: &[&[-1, 0, 1, 2], &[1, 1, 1, 1]] };
pub const SKEW_TRIANGLE: Fixture = Fixture { name: "skew-triangle", rows: &[&[1, 1, 1], &[1, -1, 0]] };
pub const SEGMENT_12: Fixture = Fixture { name: "segment-12", rows: &[&[1, 2]] };
pub const IDENTITY_2: Fixture = Fixture { name: "identity", rows: &[&[1, 0], &[0, 1]] };

/// Every fixture with `d <= 3`, `n <= 6`.
pub const CORPUS: &[Fixture] = &[
    KUMMER,
    GAUSS,
    CURVE_0134,
    CURVE_012,
    TWISTED_CUBIC,
    FOUR_SLOPES,
    BELOW_CONE,
    SKEW_TRIANGLE,
    SEGMENT_12,
    IDENTITY_2,
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_full_and_pointed() {
        for f in CORPUS {
            let g = f.matrix();
            assert!(g.is_full() && g.is_pointed(), "{}", f.name);
            assert!(g.d() <= 3 && g.n() <= 6);
        }
        assert_eq!(KUMMER.text(), "1 0 1; 0 1 1");
    }
}
