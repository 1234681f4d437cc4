//! Exact construction of stick figures of lines in `P^3` from Hadamard
//! products, and of arithmetically Gorenstein point sets with a prescribed
//! SI h-vector inside them.

pub mod construction;
pub mod error;
pub mod exactq;
pub mod gorenstein;
pub mod hvector;
pub mod projgeom;
pub mod verify;

pub use construction::{
    build_z, in_w, intersect_lines, line_l, lines_pq, matrices_mn, meeting_point_same_col,
    meeting_point_same_row, plane_forms, ruling_planes, stick_figure, system_det_closed_form,
    system_matrix, validate_config, z_generators, AConfig, IndexSet, RulingPlanes, StickFigure,
};
pub use error::{ConfigError, Error, HVectorError, Result};
pub use exactq::{
    format_rational, parse_rational, primitive_integer_vector, rat, ratio, QMatrix, Rational,
};
pub use gorenstein::{
    expected_count, gorenstein_points, point_labels, select_c1, GorensteinResult, PointLabel,
};
pub use hvector::{
    binomial, binomial_expansion, check_si_sequence, is_o_sequence, is_si_sequence, macaulay_bound,
    make_profile, residual_b, HVector, Residual, SIProfile,
};
pub use projgeom::{
    eval_poly, hadamard_point, hadamard_transform, line_through, transform_line, Line3, LineMeet,
    LinearForm, Poly, ProjPoint,
};
pub use verify::{
    check_line_grid, check_stick_figure, h_vector_of, hilbert_function, hilbert_report,
    vanishes_on, HFReport, PointSet, StickReport, StickViolation,
};
