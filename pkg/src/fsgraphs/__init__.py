"""Friends-and-strangers graphs: construction, connectivity and theorem checks."""
