interface J extends K<`a${B}`> {}
