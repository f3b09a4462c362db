namespace gpdlab {}
