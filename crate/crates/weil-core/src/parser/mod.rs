//! Declaration-file front end: lexer, parser, workspace and serializers.

pub mod error;
pub mod lexer;
pub mod parse;
pub mod serialize;
pub mod workspace;

pub use error::{ParseError, SourceSpan};
pub use parse::{parse_expr, parse_file};
pub use serialize::{serialize_report, workspace_to_source, ReportFormat};
pub use workspace::{AlgebraDecl, AlgebraForm, ConeEntry, DeclKind, ExprDecl, Workspace};
