"""Kirillov-Reshetikhin crystals of types D_n^(1), B_n^(1) and A_{2n-1}^(2)."""
