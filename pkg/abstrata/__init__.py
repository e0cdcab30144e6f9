"""abstrata: Atiyah-Bott 層別の組合せ的計算ライブラリ"""

__version__ = "0.1.0"
