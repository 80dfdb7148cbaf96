//! Transcribed reference data: the two built-in configurations, their
//! order-seven replica tables and the hyperplane type catalog.

/// Contexts of the `18_2-12_3` configuration.
pub const CONFIG_18_2_12_3: &[&[&str]] = &[
    &["IZI", "ZZI", "ZII"],
    &["ZII", "ZIZ", "IIZ"],
    &["IIZ", "IZZ", "IZI"],
    &["IXI", "XXI", "XII"],
    &["XII", "XIX", "IIX"],
    &["IIX", "IXX", "IXI"],
    &["IYI", "YYI", "YII"],
    &["YII", "YIY", "IIY"],
    &["IIY", "IYY", "IYI"],
    &["ZZI", "XXI", "YYI"],
    &["YIY", "XIX", "ZIZ"],
    &["IZZ", "IXX", "IYY"],
];

/// Contexts of the `2_4 14_2-4_3 6_4` configuration.
pub const CONFIG_2_4_14_2_4_3_6_4: &[&[&str]] = &[
    &["ZIZ", "ZII", "IIZ"],
    &["IIZ", "IZI", "IZZ"],
    &["ZII", "IZI", "ZZI"],
    &["IZZ", "XYY", "XXX"],
    &["IIX", "YII", "IYI", "YYX"],
    &["IYI", "IIY", "XII", "XYY"],
    &["YII", "IIY", "IXI", "YXY"],
    &["IIX", "XII", "IXI", "XXX"],
    &["IZZ", "ZZI", "YXY", "XXX"],
    &["IZZ", "ZIZ", "YYX", "XXX"],
];

/// Rows `a ↦ b ↦ … ↦ g` of the σ-replicas of `18_2-12_3`; column `k` is
/// the image under σ^k of column 0.
pub const REPLICAS_18_2_12_3: [[&str; 7]; 18] = [
    ["XIX", "IXX", "IIX", "XXI", "IXI", "XXX", "XII"],
    ["IZI", "ZZZ", "ZII", "ZZI", "IIZ", "ZIZ", "IZZ"],
    ["XII", "XIX", "IXX", "IIX", "XXI", "IXI", "XXX"],
    ["IZZ", "IZI", "ZZZ", "ZII", "ZZI", "IIZ", "ZIZ"],
    ["YII", "YZX", "IXY", "ZIY", "XYZ", "IYI", "YYY"],
    ["IYY", "IZX", "YYZ", "ZXI", "YYX", "XIZ", "YIY"],
    ["YIY", "IYY", "IZX", "YYZ", "ZXI", "YYX", "XIZ"],
    ["IYI", "YYY", "YII", "YZX", "IXY", "ZIY", "XYZ"],
    ["IXX", "IIX", "XXI", "IXI", "XXX", "XII", "XIX"],
    ["ZII", "ZZI", "IIZ", "ZIZ", "IZZ", "IZI", "ZZZ"],
    ["IIX", "XXI", "IXI", "XXX", "XII", "XIX", "IXX"],
    ["ZZI", "IIZ", "ZIZ", "IZZ", "IZI", "ZZZ", "ZII"],
    ["YYI", "IXZ", "YXY", "XZZ", "XZX", "ZYY", "ZIX"],
    ["XXI", "IXI", "XXX", "XII", "XIX", "IXX", "IIX"],
    ["IIZ", "ZIZ", "IZZ", "IZI", "ZZZ", "ZII", "ZZI"],
    ["IXI", "XXX", "XII", "XIX", "IXX", "IIX", "XXI"],
    ["ZIZ", "IZZ", "IZI", "ZZZ", "ZII", "ZZI", "IIZ"],
    ["IIY", "YXZ", "IYZ", "XYX", "YZZ", "YIX", "ZYX"],
];

/// Rows of the σ-replicas of `2_4 14_2-4_3 6_4`.
pub const REPLICAS_2_4_14_2_4_3_6_4: [[&str; 7]; 16] = [
    ["IZI", "ZZZ", "ZII", "ZZI", "IIZ", "ZIZ", "IZZ"],
    ["IIY", "YXZ", "IYZ", "XYX", "YZZ", "YIX", "ZYX"],
    ["XII", "XIX", "IXX", "IIX", "XXI", "IXI", "XXX"],
    ["IZZ", "IZI", "ZZZ", "ZII", "ZZI", "IIZ", "ZIZ"],
    ["XYY", "XZI", "YZY", "ZXX", "ZZX", "XXZ", "ZXZ"],
    ["XXX", "XII", "XIX", "IXX", "IIX", "XXI", "IXI"],
    ["YXY", "XZZ", "XZX", "ZYY", "ZIX", "YYI", "IXZ"],
    ["ZIZ", "IZZ", "IZI", "ZZZ", "ZII", "ZZI", "IIZ"],
    ["IXI", "XXX", "XII", "XIX", "IXX", "IIX", "XXI"],
    ["IIZ", "ZIZ", "IZZ", "IZI", "ZZZ", "ZII", "ZZI"],
    ["ZZI", "IIZ", "ZIZ", "IZZ", "IZI", "ZZZ", "ZII"],
    ["IIX", "XXI", "IXI", "XXX", "XII", "XIX", "IXX"],
    ["ZII", "ZZI", "IIZ", "ZIZ", "IZZ", "IZI", "ZZZ"],
    ["YII", "YZX", "IXY", "ZIY", "XYZ", "IYI", "YYY"],
    ["IYI", "YYY", "YII", "YZX", "IXY", "ZIY", "XYZ"],
    ["YYX", "XIZ", "YIY", "IYY", "IZX", "YYZ", "ZXI"],
];

/// Basis images defining σ, in the order XII, IXI, IIX, ZII, IZI, IIZ.
pub const SIGMA_BASIS_IMAGES: [&str; 6] = ["XIX", "XXX", "XXI", "ZZI", "ZZZ", "ZIZ"];

/// One row of the hyperplane type catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeRecord {
    /// Frohardt–Johnson index `k` of `V_k`.
    pub id: u8,
    /// Class I..XIII (by point count).
    pub class: &'static str,
    /// `(n, n0, n1, n2, n3)`.
    pub signature: (usize, usize, usize, usize, usize),
    pub lines: usize,
    /// Line-count annotation as printed, e.g. `"8+1"`.
    pub lines_note: &'static str,
    pub deep: usize,
    /// Deep-point annotation as printed, e.g. `"6+3+1"` or `"2nc"`.
    pub deep_note: &'static str,
    pub copies: usize,
}

#[allow(clippy::too_many_arguments)]
const fn rec(
    class: &'static str,
    id: u8,
    signature: (usize, usize, usize, usize, usize),
    lines: usize,
    lines_note: &'static str,
    deep: usize,
    deep_note: &'static str,
    copies: usize,
) -> TypeRecord {
    TypeRecord {
        id,
        class,
        signature,
        lines,
        lines_note,
        deep,
        deep_note,
        copies,
    }
}

/// All 25 types in the printed table order.
pub const TYPE_TABLE: [TypeRecord; 25] = [
    rec("I", 2, (21, 21, 0, 0, 0), 0, "0", 0, "0", 36),
    rec("II", 7, (23, 16, 6, 0, 1), 3, "3", 1, "1", 126),
    rec("III", 11, (25, 10, 12, 3, 0), 6, "6", 0, "0", 504),
    rec("IV", 1, (27, 0, 27, 0, 0), 9, "9", 0, "0", 28),
    rec("IV", 8, (27, 8, 15, 0, 4), 9, "9", 4, "3+1", 252),
    rec("IV", 13, (27, 8, 11, 8, 0), 9, "8+1", 0, "0", 756),
    rec("IV", 17, (27, 6, 15, 6, 0), 9, "6+3", 0, "0", 1008),
    rec("V", 12, (29, 7, 12, 6, 4), 12, "12", 4, "4", 504),
    rec("V", 18, (29, 5, 12, 12, 0), 12, "12", 0, "0", 1008),
    rec("V", 19, (29, 6, 12, 9, 2), 12, "12", 2, "2nc", 1008),
    rec("V", 23, (29, 4, 16, 7, 2), 12, "12", 2, "2c", 1512),
    rec("VI", 6, (31, 0, 24, 0, 7), 15, "15", 7, "6+1", 63),
    rec("VI", 24, (31, 4, 12, 12, 3), 15, "15", 3, "2+1", 1512),
    rec("VI", 25, (31, 4, 12, 12, 3), 15, "15", 3, "3", 2016),
    rec("VII", 14, (33, 4, 8, 17, 4), 18, "18", 4, "2+2", 756),
    rec("VII", 20, (33, 2, 12, 15, 4), 18, "18", 4, "3+1", 1008),
    rec("VIII", 3, (35, 0, 21, 0, 14), 21, "21", 14, "14", 36),
    rec("VIII", 16, (35, 0, 13, 16, 6), 21, "21", 6, "4+2", 756),
    rec("VIII", 21, (35, 2, 9, 18, 6), 21, "21", 6, "6", 1008),
    rec("IX", 15, (37, 1, 8, 20, 8), 24, "24", 8, "8", 756),
    rec("IX", 22, (37, 0, 12, 15, 10), 24, "24", 10, "6+3+1", 1008),
    rec("X", 10, (39, 0, 10, 16, 13), 27, "27", 13, "8+4+1", 378),
    rec("XI", 9, (43, 0, 3, 24, 16), 33, "33", 16, "12+3+1", 252),
    rec("XII", 5, (45, 0, 0, 27, 18), 36, "36", 18, "18", 56),
    rec("XIII", 4, (49, 0, 0, 21, 28), 42, "42", 28, "28", 36),
];
