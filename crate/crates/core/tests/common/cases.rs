//! The four three-slot cases at four labels, written in terms of scalar
//! residues: `"A012+mu"` means `A_{0,1,2} + μ`.

type Grid = [[&'static str; 3]; 3];

pub struct Case {
    pub name: &'static str,
    pub family: &'static str,
    /// The two members whose spectra are listed.
    pub members: [&'static str; 2],
    pub u: [[i64; 3]; 3],
    pub u_inverse: [[i64; 3]; 3],
    /// `(member, ~A, U⁻¹ ~A U)`.
    pub conjugated: &'static [(&'static str, Grid, Grid)],
    pub joint: &'static [[&'static str; 2]],
    /// Tuples on `ker A_{01}`, `ker A_{02}`, `ker A_{03}` and `ker(A_{0∞} - μ)`.
    pub restrictions: [[&'static str; 2]; 4],
    /// Columns of the `A_I^J` table; each row is `(J, entries)` with `J` a
    /// member, a single label or `"inf"`.
    pub columns: &'static [&'static str],
    pub table: &'static [(&'static str, &'static [&'static str])],
}

const Z: [&str; 3] = ["0", "0", "0"];

pub const CASES: [Case; 4] = [
    Case {
        name: "chain",
        family: "{0,1};{0,1,2}",
        members: ["01", "012"],
        u: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        u_inverse: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        conjugated: &[
            ("01", [["A01+mu", "A02", "A03"], Z, Z], [["A01+mu", "A02", "A03"], Z, Z]),
            (
                "012",
                [["A012+mu", "0", "A03"], ["0", "A012+mu", "A03"], ["0", "0", "A12"]],
                [["A012+mu", "0", "A03"], ["0", "A012+mu", "A03"], ["0", "0", "A12"]],
            ),
        ],
        joint: &[["A01+mu", "A012+mu"], ["0", "A012+mu"], ["0", "A12"]],
        restrictions: [["A01+mu", "A012+mu"], ["0", "A012+mu"], ["0", "A12"], ["0", "A12"]],
        columns: &["01", "012"],
        table: &[
            ("01", &["A01+mu", "A012+mu"]),
            ("012", &["0", "A012+mu"]),
            ("0123", &["0", "A12"]),
            ("1", &["A01+mu", "A012+mu"]),
            ("2", &["0", "A012+mu"]),
            ("3", &["0", "A12"]),
            ("inf", &["0", "A12"]),
        ],
    },
    Case {
        name: "winner in the second game",
        family: "{0,1,2};{1,2}",
        members: ["012", "12"],
        u: [[1, 1, 0], [1, 0, 0], [0, 0, 1]],
        u_inverse: [[0, 1, 0], [1, -1, 0], [0, 0, 1]],
        conjugated: &[
            (
                "012",
                [["A012+mu", "0", "A03"], ["0", "A012+mu", "A03"], ["0", "0", "A12"]],
                [["A012+mu", "0", "A03"], ["0", "A012+mu", "0"], ["0", "0", "A12"]],
            ),
            (
                "12",
                [["A012-A01", "-A02", "0"], ["-A01", "A012-A02", "0"], ["0", "0", "A12"]],
                [["A12", "-A01", "0"], ["0", "A012", "0"], ["0", "0", "A12"]],
            ),
        ],
        joint: &[["A012+mu", "A12"], ["A012+mu", "A012"], ["A12", "A12"]],
        restrictions: [["A012+mu", "A012"], ["A012+mu", "A012"], ["A12", "A12"], ["A12", "A12"]],
        columns: &["012", "12", "0123"],
        table: &[
            ("012", &["A012+mu", "A12", "mu"]),
            ("12", &["A012+mu", "A012", "mu"]),
            ("0123", &["A12", "A12", "mu"]),
            ("1", &["A012+mu", "A012", "mu"]),
            ("2", &["A012+mu", "A012", "mu"]),
            ("3", &["A12", "A12", "mu"]),
            ("inf", &["A12", "A12", "mu"]),
        ],
    },
    Case {
        name: "winner in the final only",
        family: "{1,2,3};{1,2}",
        members: ["123", "12"],
        u: [[1, 1, 1], [1, 1, 0], [1, 0, 0]],
        u_inverse: [[0, 0, 1], [0, 1, -1], [1, -1, 0]],
        conjugated: &[
            (
                "123",
                [["-A01", "-A02", "-A03"], ["-A01", "-A02", "-A03"], ["-A01", "-A02", "-A03"]],
                [["A123", "-A01-A02", "-A01"], Z, Z],
            ),
            (
                "12",
                [["A012-A01", "-A02", "0"], ["-A01", "A012-A02", "0"], ["0", "0", "A12"]],
                [["A12", "0", "0"], ["0", "A12", "-A01"], ["0", "0", "A012"]],
            ),
        ],
        joint: &[["A123", "A12"], ["0", "A12"], ["0", "A012"]],
        restrictions: [["0", "A012"], ["0", "A012"], ["0", "A12"], ["A123", "A12"]],
        columns: &["123", "12"],
        table: &[
            ("0123", &["A123", "A12"]),
            ("123", &["0", "A12"]),
            ("12", &["0", "A012"]),
            ("1", &["0", "A012"]),
            ("2", &["0", "A012"]),
            ("3", &["0", "A12"]),
            ("inf", &["A123", "A12"]),
        ],
    },
    Case {
        name: "two semifinals",
        family: "{0,1};{2,3}",
        members: ["01", "23"],
        u: [[1, 0, 0], [0, 1, 1], [0, 1, 0]],
        u_inverse: [[1, 0, 0], [0, 0, 1], [0, 1, -1]],
        conjugated: &[
            ("01", [["A01+mu", "A02", "A03"], Z, Z], [["A01+mu", "A03+A02", "A02"], Z, Z]),
            (
                "23",
                [["A23", "0", "0"], ["0", "A023-A02", "-A03"], ["0", "-A02", "A023-A03"]],
                [["A23", "0", "0"], ["0", "A23", "-A02"], ["0", "0", "A023"]],
            ),
        ],
        joint: &[["A01+mu", "A23"], ["0", "A23"], ["0", "A023"]],
        restrictions: [["A01+mu", "A23"], ["0", "A023"], ["0", "A023"], ["0", "A23"]],
        columns: &["01", "23"],
        table: &[
            ("01", &["A01+mu", "A23"]),
            ("0123", &["0", "A23"]),
            ("23", &["0", "A023"]),
            ("1", &["A01+mu", "A23"]),
            ("2", &["0", "A023"]),
            ("3", &["0", "A023"]),
            ("inf", &["0", "A23"]),
        ],
    },
];
