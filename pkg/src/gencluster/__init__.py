"""Cluster-method computations for consecutive block patterns in column-increasing fillings."""
