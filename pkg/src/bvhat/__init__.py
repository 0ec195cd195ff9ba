"""Braided Thompson groups as groups of fractions of forest-braid monoids."""
