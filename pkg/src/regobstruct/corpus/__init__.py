"""Bundled regression corpus: small cases with frozen expected outputs."""
