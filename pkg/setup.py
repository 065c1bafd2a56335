from setuptools import setup

setup(name='toricfill',
      version='2026.10.0',
      description='Exact concave symplectic toric fillings of contact toric 3-manifolds',
      install_requires=['numpy', 'sympy', 'matplotlib'],
      extras_require={'test': ['pytest', 'jsonschema'],
                      'doc': ['sphinx', 'guzzle_sphinx_theme']},
      license='LGPLv3',
      packages=['toricfill', 'toricfill.linalg', 'toricfill.geometry',
                'toricfill.src', 'toricfill.src._helper', 'toricfill.src.data'],
      package_data={'toricfill': ['src/data/*.json']},
      include_package_data=True,
      entry_points={'console_scripts': ['toricfill = toricfill.cli:main']},
      python_requires='>=3.7',
      zip_safe=False)
