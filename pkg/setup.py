"""Build script: compiles the optional Cython kernel.

The package works without the extension (a numpy fallback is selected at
import); if Cython or a C compiler is unavailable the build silently
degrades to pure Python.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "pgatlas._ckernel",
                ["src/pgatlas/_ckernel.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"pgatlas: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
