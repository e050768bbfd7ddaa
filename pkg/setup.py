from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("berkline._convkernel", ["src/berkline/_convkernel.pyx"])],
        language_level="3",
    )
except ImportError:
    # no Cython at build time: install pure; the kernel selector falls back
    ext_modules = []

setup(ext_modules=ext_modules)
