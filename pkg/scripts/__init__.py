"""Helper scripts for running qmetric from a checkout."""
