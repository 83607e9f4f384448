# Test package for vp-wavelets
