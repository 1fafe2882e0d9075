"""Laurent-series toolkit for minimal surfaces and their Willmore inversions."""
