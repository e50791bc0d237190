"""Plactic-type monoids of crystal bases: columns, tableaux, presentations, rewriting and automata."""
