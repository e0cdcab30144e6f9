"""サブコマンド実装（{Name}Processor / {Name}Logger の命名規則で CommandFactory が読み込む）"""
