use clap::ValueEnum;
use rimhook::RootedTableau;

#[derive(Clone, Copy, ValueEnum)]
pub enum Example {
    /// Shape (5,3,3,3) rooted at the head of the top row; six rule applications.
    SixStep,
    /// Shape (2,2,1,1) rooted at the tail of its long hook; three rule applications.
    Opening,
}

const SIX_STEP: &str = r#"{
    "hooks": [
        [[1, 1], [1, 2], [1, 3], [1, 4], [1, 5]],
        [[2, 1]],
        [[3, 1], [3, 2], [2, 2]],
        [[4, 1], [4, 2], [4, 3], [3, 3], [2, 3]]
    ],
    "root": [1, 5]
}"#;

const OPENING: &str = r#"{
    "hooks": [
        [[1, 1], [1, 2]],
        [[4, 1], [3, 1], [2, 1], [2, 2]]
    ],
    "root": [4, 1]
}"#;

impl Example {
    pub fn tableau(self) -> RootedTableau {
        let text = match self {
            Example::SixStep => SIX_STEP,
            Example::Opening => OPENING,
        };
        serde_json::from_str(text).expect("built-in example is valid")
    }
}
