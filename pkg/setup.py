from setuptools import Extension, setup

# The compiled remap kernel is optional: if Cython or a C compiler is
# missing, the package falls back to the pure-numpy implementation
# selected at import time in vast360.kernels.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "vast360._remap_cy",
                ["src/vast360/_remap_cy.pyx"],
                # -ffp-contract=off keeps the compiled kernel bit-identical
                # to the numpy fallback (no FMA re-association).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
